__project_name__ = 'curvekit'
__version__ = '0.1.0'
