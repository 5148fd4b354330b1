"""Exception hierarchy shared by every layer of the toolkit.

Each class carries a stable ``code`` used verbatim by the CLI and the
HTTP service, so error identity survives serialization.
"""


class JawiError(Exception):
    code = "JawiError"

    def detail(self):
        """Optional structured payload for API responses."""
        return None


class UnknownLetter(JawiError):
    code = "UnknownLetter"

    def __init__(self, key):
        super().__init__(f"no letter with id or code point {key!r}")
        self.key = key

    def detail(self):
        return {"key": str(self.key)}


class UnknownCodepoint(JawiError):
    code = "UnknownCodepoint"

    def __init__(self, char, position):
        super().__init__(
            f"code point U+{ord(char):04X} at position {position} is not in the rule table"
        )
        self.char = char
        self.position = position

    def detail(self):
        return {"char": self.char, "position": self.position}


class UnencodableInput(JawiError):
    code = "UnencodableInput"

    def __init__(self, word, position):
        super().__init__(f"no rule consumes {word[position:]!r} at position {position}")
        self.word = word
        self.position = position

    def detail(self):
        return {"word": self.word, "position": self.position}


class EmptyInput(JawiError):
    code = "EmptyInput"

    def __init__(self, what="input"):
        super().__init__(f"{what} must be nonempty")


class InputTooLong(JawiError):
    code = "InputTooLong"

    def __init__(self, length, limit):
        super().__init__(f"input of {length} letters exceeds the enumeration limit of {limit}")
        self.length = length
        self.limit = limit


class ParseError(JawiError):
    code = "ParseError"

    def __init__(self, message, where=None):
        super().__init__(message if where is None else f"{where}: {message}")
        self.where = where


class ValidationError(JawiError):
    code = "ValidationError"

    def __init__(self, rule_id, reason):
        super().__init__(f"{rule_id}: {reason}")
        self.rule_id = rule_id
        self.reason = reason

    def detail(self):
        return {"rule": self.rule_id, "reason": self.reason}


class NoPendingSelection(JawiError):
    code = "NoPendingSelection"

    def __init__(self):
        super().__init__("no letter is pending; pick a letter first")


class NoReadingChosen(JawiError):
    code = "NoReadingChosen"

    def __init__(self):
        super().__init__("the pending letter has no chosen reading")


class ReadingIndexOutOfRange(JawiError):
    code = "ReadingIndexOutOfRange"

    def __init__(self, index, count):
        super().__init__(f"reading index {index} out of range (0..{count - 1})")
        self.index = index
        self.count = count
