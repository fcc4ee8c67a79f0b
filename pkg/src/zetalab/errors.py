"""Exception hierarchy.

Every domain error derives from :class:`ZetalabError` (itself a
``ValueError``) so callers can catch the whole family at once.  The CLI
reports the class name as the error name.
"""


class ZetalabError(ValueError):
    pass


class InvalidInput(ZetalabError):
    pass


class InvalidCharacter(ZetalabError):
    pass


class InvalidDiscriminant(ZetalabError):
    pass


class UnsupportedCharacter(ZetalabError):
    pass


class PrecisionError(ZetalabError):
    pass


class DivergentIndex(ZetalabError):
    pass


class PoleError(ZetalabError):
    pass


class InvalidBranch(ZetalabError):
    pass


class InvalidWeight(ZetalabError):
    pass
