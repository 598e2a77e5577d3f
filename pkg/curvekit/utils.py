class FilterString:
    'words a check id must contain; "-word" excludes'

    def __init__(self):
        self.set()

    def set(self, s: str = ''):
        self.filter_string = s
        words = {i.lower() for i in s.replace(',', ' ').split()}
        exclude = {i for i in words if i.startswith('-')}
        self.exclude = {i[1:] for i in exclude}
        self.words = words - exclude

    def found(self, *fields: str) -> bool:
        if not self.filter_string:
            return True
        low_fields = {i.lower() for i in fields}
        if any(any(f.find(s) >= 0 for f in low_fields) for s in self.exclude):
            return False
        if not self.words:
            return True
        return any(any(f.find(s) >= 0 for f in low_fields) for s in self.words)
