"""Regex front-end: union (+), concatenation, star, parentheses, epsilon "()".

ASTs are plain tagged tuples:
    ("empty",) ("eps",) ("lit", ch) ("union", a, b) ("cat", a, b) ("star", a)
"""

from __future__ import annotations

from ..errors import RegexSyntaxError

EMPTY = ("empty",)
EPSILON = ("eps",)


def lit(ch):
    return ("lit", ch)


def union(*parts):
    if not parts:
        return EMPTY
    acc = parts[0]
    for p in parts[1:]:
        acc = ("union", acc, p)
    return acc


def cat(*parts):
    if not parts:
        return EPSILON
    acc = parts[0]
    for p in parts[1:]:
        acc = ("cat", acc, p)
    return acc


def star(a):
    return ("star", a)


class _Parser:
    def __init__(self, text, alphabet):
        self.text = text
        self.alphabet = set(alphabet)
        self.pos = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else None

    def fail(self, message):
        raise RegexSyntaxError(message, self.pos)

    def parse(self):
        node = self.union()
        if self.pos != len(self.text):
            self.fail(f"unexpected {self.peek()!r}")
        return node

    def union(self):
        node = self.concat()
        while self.peek() == "+":
            self.pos += 1
            node = ("union", node, self.concat())
        return node

    def concat(self):
        parts = []
        while True:
            c = self.peek()
            if c is None or c in "+)":
                break
            parts.append(self.postfix())
        if not parts:
            self.fail("empty alternative")
        return cat(*parts)

    def postfix(self):
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = ("star", node)
        return node

    def atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            if self.peek() == ")":
                self.pos += 1
                return EPSILON
            node = self.union()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return node
        if c is None or c in "*+)":
            self.fail(f"unexpected {c!r}")
        if c not in self.alphabet:
            self.fail(f"symbol {c!r} not in alphabet")
        self.pos += 1
        return ("lit", c)


def parse_regex(text, alphabet):
    return _Parser(text, alphabet).parse()
