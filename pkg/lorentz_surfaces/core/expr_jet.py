"""
Expression language and second-order jets.

Generating functions are supplied as formulas in a single real variable. They are
parsed into an immutable AST and evaluated together with their first and second
derivatives using truncated Taylor arithmetic (``Jet2``). Evaluation accepts a
scalar or a numpy array of parameter values.
"""

import math
import re
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, Union

import numpy as np

from ..errors import ArityError, DomainError, ExpressionSyntaxError, UnknownIdentifierError

FUNCTIONS = ("sin", "cos", "tan", "sinh", "cosh", "tanh", "exp", "ln", "sqrt", "abs")
CONSTANTS = {"pi": math.pi, "e": math.e}

# |cos u| below this counts as a pole of tan; cos(pi/2) rounds to about 6e-17
TAN_POLE_TOL = 1e-12

_TOKEN_RE = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^(),])"
)

# Binding strength used by the printer
_PREC_ADD = 1
_PREC_MUL = 2
_PREC_NEG = 3
_PREC_POW = 4
_PREC_ATOM = 5


# ---------------------------------------------------------------------------
# Jets
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Jet2:
    """Value with exact first and second derivative

    Fields may be floats or numpy arrays of a common (broadcastable) shape.
    A stacked jet (leading axis = coordinate) can be indexed with ``jet[i]``.
    """

    v: Any
    d1: Any
    d2: Any

    # ndarray (op) Jet2 must dispatch to the reflected Jet2 method
    __array_ufunc__ = None

    @classmethod
    def constant(cls, value: Any) -> "Jet2":
        return cls(value, 0.0 * value, 0.0 * value)

    @classmethod
    def variable(cls, t: Any) -> "Jet2":
        return cls(t, 1.0 + 0.0 * t, 0.0 * t)

    @classmethod
    def stack(cls, jets: list["Jet2"]) -> "Jet2":
        """Stack scalar-field jets into one jet with a leading coordinate axis"""
        shape = np.broadcast_shapes(*(np.shape(part) for jet in jets for part in (jet.v, jet.d1, jet.d2)))
        return cls(
            np.stack([np.broadcast_to(j.v, shape) for j in jets]).astype(float),
            np.stack([np.broadcast_to(j.d1, shape) for j in jets]).astype(float),
            np.stack([np.broadcast_to(j.d2, shape) for j in jets]).astype(float),
        )

    def __getitem__(self, index) -> "Jet2":
        return Jet2(self.v[index], self.d1[index], self.d2[index])

    def compose(self, phi0: Any, phi1: Any, phi2: Any) -> "Jet2":
        """Chain rule for phi(u) given phi, phi' and phi'' evaluated at u = self.v"""
        return Jet2(phi0, phi1 * self.d1, phi2 * self.d1 * self.d1 + phi1 * self.d2)

    def __add__(self, other) -> "Jet2":
        other = _as_jet(other)
        return Jet2(self.v + other.v, self.d1 + other.d1, self.d2 + other.d2)

    __radd__ = __add__

    def __neg__(self) -> "Jet2":
        return Jet2(-self.v, -self.d1, -self.d2)

    def __sub__(self, other) -> "Jet2":
        return self + (-_as_jet(other))

    def __rsub__(self, other) -> "Jet2":
        return _as_jet(other) + (-self)

    def __mul__(self, other) -> "Jet2":
        other = _as_jet(other)
        return Jet2(
            self.v * other.v,
            self.d1 * other.v + self.v * other.d1,
            self.d2 * other.v + 2.0 * self.d1 * other.d1 + self.v * other.d2,
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet2":
        inv = 1.0 / self.v
        return self.compose(inv, -inv * inv, 2.0 * inv * inv * inv)

    def __truediv__(self, other) -> "Jet2":
        return self * _as_jet(other).reciprocal()

    def __rtruediv__(self, other) -> "Jet2":
        return _as_jet(other) * self.reciprocal()

    def powi(self, n: int) -> "Jet2":
        """Integer power by repeated multiplication"""
        if n < 0:
            return self.powi(-n).reciprocal()
        result = Jet2.constant(1.0 + 0.0 * self.v)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sqrt(self) -> "Jet2":
        root = np.sqrt(self.v)
        return self.compose(root, 0.5 / root, -0.25 / (root * root * root))

    def abs(self) -> "Jet2":
        sign = np.sign(self.v)
        return Jet2(np.abs(self.v), sign * self.d1, sign * self.d2)


def _as_jet(value) -> Jet2:
    if isinstance(value, Jet2):
        return value
    return Jet2.constant(value)


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: float
    name: str | None = None


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Node"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Const, Var, Unary, Binary, Call]


def _format_number(value: float) -> str:
    if float(value).is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def _precedence(node: Node) -> int:
    if isinstance(node, Binary):
        return {"+": _PREC_ADD, "-": _PREC_ADD, "*": _PREC_MUL, "/": _PREC_MUL, "^": _PREC_POW}[node.op]
    if isinstance(node, Unary):
        return _PREC_NEG
    return _PREC_ATOM


def _wrap(node: Node, parenthesize: bool) -> str:
    text = to_source(node)
    return f"({text})" if parenthesize else text


def to_source(node: Node) -> str:
    """Serialize an AST with the minimal parentheses that preserve its structure"""
    if isinstance(node, Const):
        return node.name if node.name else _format_number(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({to_source(node.arg)})"
    if isinstance(node, Unary):
        return "-" + _wrap(node.operand, _precedence(node.operand) < _PREC_NEG)

    prec = _precedence(node)
    if node.op == "^":
        left = _wrap(node.left, _precedence(node.left) <= _PREC_POW)
        right = _wrap(node.right, _precedence(node.right) < _PREC_NEG)
        return f"{left}^{right}"
    left = _wrap(node.left, _precedence(node.left) < prec)
    right = _wrap(node.right, _precedence(node.right) <= prec)
    if prec == _PREC_ADD:
        return f"{left} {node.op} {right}"
    return f"{left}{node.op}{right}"


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    position = 0
    while position < len(source):
        match = _TOKEN_RE.match(source, position)
        byte_offset = len(source[:position].encode("utf-8"))
        if not match:
            raise ExpressionSyntaxError(f"Unexpected character '{source[position]}'", byte_offset)
        kind = match.lastgroup or ""
        if kind != "space":
            tokens.append(_Token(kind, match.group(), byte_offset))
        position = match.end()
    tokens.append(_Token("end", "", len(source.encode("utf-8"))))
    return tokens


class _Parser:
    """Recursive descent over the grammar documented in docs/GRAMMAR.md"""

    def __init__(self, source: str, variable: str):
        self.tokens = _tokenize(source)
        self.variable = variable
        self.position = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.position]

    def _advance(self) -> _Token:
        token = self.current
        self.position += 1
        return token

    def _accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.position += 1
            return True
        return False

    def _expect(self, text: str) -> None:
        if not self._accept(text):
            found = self.current.text or "end of input"
            raise ExpressionSyntaxError(f"Expected '{text}', found '{found}'", self.current.offset)

    def parse(self) -> Node:
        node = self._expression()
        if self.current.kind != "end":
            token = self.current
            if token.kind in ("number", "ident") or token.text == "(":
                raise ExpressionSyntaxError(f"Missing operator before '{token.text}'", token.offset)
            raise ExpressionSyntaxError(f"Unexpected '{token.text}'", token.offset)
        return node

    def _expression(self) -> Node:
        node = self._term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self._advance().text
            node = Binary(op, node, self._term())
        return node

    def _term(self) -> Node:
        node = self._unary()
        while self.current.kind == "op" and self.current.text in "*/":
            op = self._advance().text
            node = Binary(op, node, self._unary())
        return node

    def _unary(self) -> Node:
        if self._accept("-"):
            return Unary("-", self._unary())
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> Node:
        base = self._primary()
        if self._accept("^"):
            # right-associative; the exponent may carry its own sign
            return Binary("^", base, self._unary())
        return base

    def _primary(self) -> Node:
        token = self.current
        if token.kind == "number":
            self._advance()
            return Const(float(token.text))
        if token.kind == "ident":
            self._advance()
            return self._identifier(token)
        if self._accept("("):
            node = self._expression()
            self._expect(")")
            return node
        found = token.text or "end of input"
        raise ExpressionSyntaxError(f"Expected a number, identifier or '(', found '{found}'", token.offset)

    def _identifier(self, token: _Token) -> Node:
        name = token.text
        is_call = self.current.kind == "op" and self.current.text == "("
        if not is_call:
            if name == self.variable:
                return Var(name)
            if name in CONSTANTS:
                return Const(CONSTANTS[name], name)
            if name in FUNCTIONS:
                raise ExpressionSyntaxError(f"Function '{name}' must be followed by '('", self.current.offset)
            raise UnknownIdentifierError(name, token.offset)

        if name not in FUNCTIONS:
            raise UnknownIdentifierError(name, token.offset)
        self._expect("(")
        args = []
        if not (self.current.kind == "op" and self.current.text == ")"):
            args.append(self._expression())
            while self._accept(","):
                args.append(self._expression())
        self._expect(")")
        if len(args) != 1:
            raise ArityError(name, 1, len(args), token.offset)
        return Call(name, args[0])


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


class _JetEvaluator:
    """Evaluates an AST to a Jet2, checking the real domain of every subexpression"""

    def __init__(self, t: Any):
        self.t = t

    def _fail(self, reason: str, node: Node, mask: Any) -> None:
        mask = np.asarray(mask)
        if not mask.any():
            return
        if mask.ndim == 0:
            raise DomainError(reason, to_source(node), float(np.asarray(self.t)))
        index = int(np.flatnonzero(mask)[0])
        t_value = float(np.broadcast_to(self.t, mask.shape).flat[index])
        raise DomainError(reason, to_source(node), t_value, index)

    def evaluate(self, node: Node) -> Jet2:
        jet = self._dispatch(node)
        finite = np.isfinite(jet.v) & np.isfinite(jet.d1) & np.isfinite(jet.d2)
        self._fail("non-finite value", node, ~finite)
        return jet

    def _dispatch(self, node: Node) -> Jet2:
        if isinstance(node, Const):
            return Jet2.constant(node.value)
        if isinstance(node, Var):
            return Jet2.variable(self.t)
        if isinstance(node, Unary):
            return -self.evaluate(node.operand)
        if isinstance(node, Call):
            return self._call(node)
        return self._binary(node)

    def _binary(self, node: Binary) -> Jet2:
        left = self.evaluate(node.left)
        if node.op == "^":
            return self._power(node, left)
        right = self.evaluate(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        self._fail("division by zero", node, np.asarray(right.v) == 0)
        return left / right

    def _power(self, node: Binary, base: Jet2) -> Jet2:
        exponent_value = _constant_value(node.right)
        if exponent_value is not None and float(exponent_value).is_integer():
            n = int(exponent_value)
            if n < 0:
                self._fail("division by zero", node, np.asarray(base.v) == 0)
            return base.powi(n)
        exponent = self.evaluate(node.right)
        self._fail("non-integer power of a non-positive base", node, np.asarray(base.v) <= 0)
        log_base = base.compose(np.log(base.v), 1.0 / base.v, -1.0 / (base.v * base.v))
        product = exponent * log_base
        value = np.exp(product.v)
        return product.compose(value, value, value)

    def _call(self, node: Call) -> Jet2:
        u = self.evaluate(node.arg)
        x = u.v
        name = node.func
        if name == "sin":
            return u.compose(np.sin(x), np.cos(x), -np.sin(x))
        if name == "cos":
            return u.compose(np.cos(x), -np.sin(x), -np.cos(x))
        if name == "tan":
            self._fail("pole of tan", node, np.abs(np.cos(x)) < TAN_POLE_TOL)
            tangent = np.tan(x)
            secant2 = 1.0 + tangent * tangent
            return u.compose(tangent, secant2, 2.0 * tangent * secant2)
        if name == "sinh":
            return u.compose(np.sinh(x), np.cosh(x), np.sinh(x))
        if name == "cosh":
            return u.compose(np.cosh(x), np.sinh(x), np.cosh(x))
        if name == "tanh":
            th = np.tanh(x)
            sech2 = 1.0 - th * th
            return u.compose(th, sech2, -2.0 * th * sech2)
        if name == "exp":
            value = np.exp(x)
            return u.compose(value, value, value)
        if name == "ln":
            self._fail("logarithm of a non-positive value", node, np.asarray(x) <= 0)
            return u.compose(np.log(x), 1.0 / x, -1.0 / (x * x))
        if name == "sqrt":
            self._fail("square root of a non-positive value", node, np.asarray(x) <= 0)
            return u.sqrt()
        self._fail("abs is not differentiable at zero", node, np.asarray(x) == 0)
        return u.abs()


def _constant_value(node: Node) -> float | None:
    """Numeric value of a variable-free literal (number, named constant or negated literal)"""
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Unary):
        inner = _constant_value(node.operand)
        return None if inner is None else -inner
    return None


def _contains_variable(node: Node) -> bool:
    if isinstance(node, Var):
        return True
    if isinstance(node, Const):
        return False
    if isinstance(node, Unary):
        return _contains_variable(node.operand)
    if isinstance(node, Call):
        return _contains_variable(node.arg)
    return _contains_variable(node.left) or _contains_variable(node.right)


def _map_variable(node: Node, replacement: Node) -> Node:
    if isinstance(node, Var):
        return replacement
    if isinstance(node, Const):
        return node
    if isinstance(node, Unary):
        return Unary(node.op, _map_variable(node.operand, replacement))
    if isinstance(node, Call):
        return Call(node.func, _map_variable(node.arg, replacement))
    return Binary(node.op, _map_variable(node.left, replacement), _map_variable(node.right, replacement))


# ---------------------------------------------------------------------------
# Expression
# ---------------------------------------------------------------------------


def _literal_node(value: float) -> Node:
    if not math.isfinite(value):
        raise DomainError("non-finite constant", _format_number(value))
    if value < 0:
        return Unary("-", Const(-float(value)))
    return Const(float(value))


def _plain_literal(node: Node) -> float | None:
    """Value of an unnamed numeric literal, possibly negated"""
    if isinstance(node, Const) and node.name is None:
        return node.value
    if isinstance(node, Unary) and isinstance(node.operand, Const) and node.operand.name is None:
        return -node.operand.value
    return None


@dataclass(frozen=True)
class Expression:
    """Parsed formula in one variable

    Equality is structural: two expressions are equal when their ASTs and
    variable names coincide, regardless of the source text they came from.
    """

    ast: Node
    variable: str = "t"
    source: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.source:
            object.__setattr__(self, "source", to_source(self.ast))

    @classmethod
    def constant(cls, value: float, variable: str = "t") -> "Expression":
        return cls(_literal_node(value), variable)

    @classmethod
    def identity(cls, variable: str = "t") -> "Expression":
        return cls(Var(variable), variable)

    def to_source(self) -> str:
        return to_source(self.ast)

    @property
    def is_constant(self) -> bool:
        return not _contains_variable(self.ast)

    def jet(self, t: Any) -> Jet2:
        return eval_jet2(self, t)

    def evaluate(self, t: Any) -> Any:
        return eval_jet2(self, t).v

    def substitute_linear(self, sign: int, shift: float = 0.0) -> "Expression":
        """Expression in the new parameter s where t = sign*s + shift"""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        replacement = Expression.identity(self.variable)
        if sign < 0:
            replacement = -replacement
        replacement = replacement + shift
        return Expression(_map_variable(self.ast, replacement.ast), self.variable)

    # Arithmetic with identity folding. Operands may be numbers.

    def _coerce(self, other) -> "Expression":
        if isinstance(other, Expression):
            return other
        return Expression.constant(float(other), self.variable)

    def _make(self, node: Node) -> "Expression":
        return Expression(node, self.variable)

    def __neg__(self) -> "Expression":
        if isinstance(self.ast, Unary):
            return self._make(self.ast.operand)
        if _plain_literal(self.ast) == 0:
            return self
        return self._make(Unary("-", self.ast))

    def __add__(self, other) -> "Expression":
        other = self._coerce(other)
        if _plain_literal(other.ast) == 0:
            return self
        if _plain_literal(self.ast) == 0:
            return other
        if isinstance(other.ast, Unary):
            return self._make(Binary("-", self.ast, other.ast.operand))
        return self._make(Binary("+", self.ast, other.ast))

    def __radd__(self, other) -> "Expression":
        return self._coerce(other) + self

    def __sub__(self, other) -> "Expression":
        other = self._coerce(other)
        if _plain_literal(other.ast) == 0:
            return self
        if _plain_literal(self.ast) == 0:
            return -other
        return self._make(Binary("-", self.ast, other.ast))

    def __rsub__(self, other) -> "Expression":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Expression":
        other = self._coerce(other)
        left, right = _plain_literal(self.ast), _plain_literal(other.ast)
        if left == 0 or right == 0:
            return Expression.constant(0.0, self.variable)
        if right == 1:
            return self
        if left == 1:
            return other
        if right == -1:
            return -self
        if left == -1:
            return -other
        return self._make(Binary("*", self.ast, other.ast))

    def __rmul__(self, other) -> "Expression":
        return self._coerce(other) * self

    def __truediv__(self, other) -> "Expression":
        other = self._coerce(other)
        if _plain_literal(other.ast) == 1:
            return self
        return self._make(Binary("/", self.ast, other.ast))

    def __rtruediv__(self, other) -> "Expression":
        return self._coerce(other) / self

    def __pow__(self, other) -> "Expression":
        other = self._coerce(other)
        exponent = _plain_literal(other.ast)
        if exponent == 1:
            return self
        if exponent == 0 or _plain_literal(self.ast) == 1:
            return Expression.constant(1.0, self.variable)
        return self._make(Binary("^", self.ast, other.ast))

    def __str__(self) -> str:
        return self.source


def parse(source: str, variable_name: str = "t") -> Expression:
    """Parse ``source`` as a formula in ``variable_name``"""
    if not source or not source.strip():
        raise ExpressionSyntaxError("Expression is empty", 0)
    if variable_name in FUNCTIONS:
        raise ValueError(f"Variable name '{variable_name}' shadows a function")
    ast = _Parser(source, variable_name).parse()
    return Expression(ast, variable_name, source)


def eval_jet2(e: Expression, t: Any) -> Jet2:
    """Value, first and second derivative of ``e`` at ``t`` (scalar or array)"""
    is_array = np.ndim(t) > 0
    t_values = np.asarray(t, dtype=float) if is_array else float(t)
    with np.errstate(all="ignore"):
        jet = _JetEvaluator(t_values).evaluate(e.ast)
    if is_array:
        shape = np.shape(t_values)
        return Jet2(
            np.broadcast_to(jet.v, shape).astype(float),
            np.broadcast_to(jet.d1, shape).astype(float),
            np.broadcast_to(jet.d2, shape).astype(float),
        )
    return Jet2(float(jet.v), float(jet.d1), float(jet.d2))


def jet_function(e: Expression) -> Callable[[Any], Jet2]:
    """Bind ``e`` as a callable t -> Jet2"""
    return lambda t: eval_jet2(e, t)
