"""Reverse-mode automatic differentiation and dense MLP primitives.

Two complementary mechanisms are provided:

* a recording ``Tape`` of array operations with a reverse adjoint pass,
  used to obtain parameter gradients of scalar training losses;
* a truncated multivariate Taylor ("jet") algebra used to propagate exact
  derivatives of network outputs with respect to selected inputs.  Jet
  coefficients may be plain numpy arrays (inference) or tape variables
  (training losses that themselves contain input derivatives).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product as _iproduct

import numpy as np

from .errors import (
    ConfigurationError,
    TrainingDivergedError,
    UnsupportedOrderError,
)

__all__ = [
    "Tape",
    "Var",
    "Jet",
    "MlpNetwork",
    "AdamState",
    "forward",
    "derivative",
    "glorot_init",
    "adam_step",
    "save_network",
    "load_network",
]


# ---------------------------------------------------------------------------
# Reverse-mode tape
# ---------------------------------------------------------------------------

def _unbroadcast(grad, shape):
    """Sum `grad` down to `shape` (reverse of numpy broadcasting)."""
    if grad.shape == shape:
        return grad
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for ax, n in enumerate(shape):
        if n == 1 and grad.shape[ax] != 1:
            grad = grad.sum(axis=ax, keepdims=True)
    return grad


class Tape:
    """Linear record of array operations.

    Each node stores the operation tag, operand node indices and the cached
    forward value; `replay` recomputes all cached values from the leaves and
    `backward` runs the adjoint pass in reverse topological (= recording)
    order.
    """

    def __init__(self):
        self.ops = []       # (tag, parent indices, context)
        self.values = []    # cached forward values

    def _push(self, tag, parents, value, ctx=None):
        self.ops.append((tag, parents, ctx))
        self.values.append(value)
        return Var(self, len(self.values) - 1)

    def var(self, value):
        """Create a leaf variable."""
        return self._push("leaf", (), np.asarray(value, dtype=float))

    def constant(self, value):
        return self._push("const", (), np.asarray(value, dtype=float))

    def replay(self):
        """Recompute every cached value from the leaves; returns the values."""
        for i, (tag, parents, ctx) in enumerate(self.ops):
            if tag in ("leaf", "const"):
                continue
            args = [self.values[p] for p in parents]
            self.values[i] = _FORWARD[tag](ctx, *args)
        return self.values

    def backward(self, out: "Var"):
        """Adjoints of every node with respect to scalar output `out`."""
        adj = [None] * len(self.values)
        adj[out.i] = np.ones_like(self.values[out.i])
        for i in range(out.i, -1, -1):
            g = adj[i]
            if g is None:
                continue
            tag, parents, ctx = self.ops[i]
            if tag in ("leaf", "const"):
                continue
            grads = _BACKWARD[tag](ctx, g, *[self.values[p] for p in parents])
            for p, pg in zip(parents, grads):
                if pg is None:
                    continue
                pg = _unbroadcast(pg, self.values[p].shape)
                adj[p] = pg if adj[p] is None else adj[p] + pg
        return adj


_FORWARD = {
    "add": lambda ctx, a, b: a + b,
    "sub": lambda ctx, a, b: a - b,
    "mul": lambda ctx, a, b: a * b,
    "div": lambda ctx, a, b: a / b,
    "neg": lambda ctx, a: -a,
    "pow": lambda ctx, a: a ** ctx,
    "matmul": lambda ctx, a, b: a @ b,
    "tanh": lambda ctx, a: np.tanh(a),
    "exp": lambda ctx, a: np.exp(a),
    "log": lambda ctx, a: np.log(a),
    "sqrt": lambda ctx, a: np.sqrt(a),
    "relu": lambda ctx, a: np.maximum(a, 0.0),
    "step": lambda ctx, a: (a > 0).astype(float),
    "sign": lambda ctx, a: np.sign(a),
    "abs": lambda ctx, a: np.abs(a),
    "sum": lambda ctx, a: np.asarray(a.sum()),
    "mean": lambda ctx, a: np.asarray(a.mean()),
}

_BACKWARD = {
    "add": lambda ctx, g, a, b: (g, g),
    "sub": lambda ctx, g, a, b: (g, -g),
    "mul": lambda ctx, g, a, b: (g * b, g * a),
    "div": lambda ctx, g, a, b: (g / b, -g * a / b ** 2),
    "neg": lambda ctx, g, a: (-g,),
    "pow": lambda ctx, g, a: (g * ctx * a ** (ctx - 1),),
    "matmul": lambda ctx, g, a, b: (g @ b.T, a.T @ g),
    "tanh": lambda ctx, g, a: (g * (1.0 - np.tanh(a) ** 2),),
    "exp": lambda ctx, g, a: (g * np.exp(a),),
    "log": lambda ctx, g, a: (g / a,),
    "sqrt": lambda ctx, g, a: (g * 0.5 / np.sqrt(a),),
    "relu": lambda ctx, g, a: (g * (a > 0),),
    "step": lambda ctx, g, a: (None,),
    "sign": lambda ctx, g, a: (None,),
    "abs": lambda ctx, g, a: (g * np.sign(a),),
    "sum": lambda ctx, g, a: (g * np.ones_like(a),),
    "mean": lambda ctx, g, a: (g * np.ones_like(a) / a.size,),
}


class Var:
    """Handle to one tape node."""

    __slots__ = ("tape", "i")
    __array_priority__ = 100  # beat ndarray operator dispatch

    def __init__(self, tape, i):
        self.tape = tape
        self.i = i

    @property
    def value(self):
        return self.tape.values[self.i]

    def _lift(self, other):
        if isinstance(other, Var):
            return other
        return self.tape.constant(other)

    def _bin(self, tag, other):
        o = self._lift(other)
        val = _FORWARD[tag](None, self.value, o.value)
        return self.tape._push(tag, (self.i, o.i), val)

    def _rbin(self, tag, other):
        o = self._lift(other)
        val = _FORWARD[tag](None, o.value, self.value)
        return self.tape._push(tag, (o.i, self.i), val)

    def _un(self, tag, ctx=None):
        val = _FORWARD[tag](ctx, self.value)
        return self.tape._push(tag, (self.i,), val, ctx)

    def __add__(self, o):
        return self._bin("add", o)

    __radd__ = __add__

    def __sub__(self, o):
        return self._bin("sub", o)

    def __rsub__(self, o):
        return self._rbin("sub", o)

    def __mul__(self, o):
        return self._bin("mul", o)

    __rmul__ = __mul__

    def __truediv__(self, o):
        return self._bin("div", o)

    def __rtruediv__(self, o):
        return self._rbin("div", o)

    def __neg__(self):
        return self._un("neg")

    def __pow__(self, p):
        return self._un("pow", float(p))

    def __matmul__(self, o):
        return self._bin("matmul", o)

    def __rmatmul__(self, o):
        return self._rbin("matmul", o)

    def tanh(self):
        return self._un("tanh")

    def exp(self):
        return self._un("exp")

    def log(self):
        return self._un("log")

    def sqrt(self):
        return self._un("sqrt")

    def relu(self):
        return self._un("relu")

    def step(self):
        return self._un("step")

    def sign(self):
        return self._un("sign")

    def abs(self):
        return self._un("abs")

    def sum(self):
        return self._un("sum")

    def mean(self):
        return self._un("mean")


# Alias used in type annotations / docs.
ComputationTape = Tape


# ---------------------------------------------------------------------------
# Dispatch helpers valid for both ndarray and Var operands
# ---------------------------------------------------------------------------

def _is_var(x):
    return isinstance(x, Var)


def _tanh(x):
    return x.tanh() if _is_var(x) else np.tanh(x)


def _exp(x):
    return x.exp() if _is_var(x) else np.exp(x)


def _log(x):
    return x.log() if _is_var(x) else np.log(x)


def _sqrt(x):
    return x.sqrt() if _is_var(x) else np.sqrt(x)


def _relu(x):
    return x.relu() if _is_var(x) else np.maximum(x, 0.0)


def _step(x):
    return x.step() if _is_var(x) else (np.asarray(x) > 0).astype(float)


def _sign(x):
    return x.sign() if _is_var(x) else np.sign(x)


def _matmul(w, a):
    return w @ a


# ---------------------------------------------------------------------------
# Truncated multivariate Taylor jets
# ---------------------------------------------------------------------------

def multi_indices(nvars, order):
    """All multi-indices of length `nvars` with total degree <= `order`."""
    out = [k for k in _iproduct(range(order + 1), repeat=nvars)
           if sum(k) <= order]
    out.sort(key=lambda k: (sum(k), k))
    return out


@dataclass
class Jet:
    """Truncated Taylor polynomial in `nvars` variables up to `order`.

    `coeffs` maps multi-index -> Taylor coefficient (derivative / k!).
    Coefficients are numpy arrays or tape `Var`s; all arithmetic goes
    through python operators so both work transparently.
    """

    nvars: int
    order: int
    coeffs: dict = field(default_factory=dict)

    @classmethod
    def constant(cls, value, nvars, order):
        z = (0,) * nvars
        return cls(nvars, order, {z: value})

    @classmethod
    def variable(cls, value, var_index, nvars, order, seed=1.0):
        z = (0,) * nvars
        j = cls(nvars, order, {z: value})
        if order >= 1:
            e = tuple(1 if i == var_index else 0 for i in range(nvars))
            j.coeffs[e] = seed * _ones_like(value)
        return j

    def coeff(self, idx):
        idx = tuple(idx)
        if idx in self.coeffs:
            return self.coeffs[idx]
        return 0.0

    def deriv(self, idx):
        """Partial derivative for multi-index `idx` (coefficient * prod k!)."""
        fact = 1.0
        for k in idx:
            fact *= math.factorial(k)
        return self.coeff(idx) * fact

    @property
    def value(self):
        return self.coeff((0,) * self.nvars)

    def _wrap(self, other):
        if isinstance(other, Jet):
            return other
        return Jet.constant(other, self.nvars, self.order)

    def __add__(self, other):
        o = self._wrap(other)
        c = dict(self.coeffs)
        for k, v in o.coeffs.items():
            c[k] = c[k] + v if k in c else v
        return Jet(self.nvars, self.order, c)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.nvars, self.order, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet(self.nvars, self.order,
                       {k: v * other for k, v in self.coeffs.items()})
        c = {}
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                if sum(k) > self.order:
                    continue
                term = va * vb
                c[k] = c[k] + term if k in c else term
        return Jet(self.nvars, self.order, c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            return self * (1.0 / other)
        return self * other.apply(_recip_coeffs)

    def __rtruediv__(self, other):
        return self.apply(_recip_coeffs) * other

    def apply(self, coeff_fn):
        """Compose with a scalar function given its Taylor coefficient rule.

        `coeff_fn(a0, order)` returns `[c0..c_order]`, the Taylor
        coefficients of the function expanded at `a0`.
        """
        a0 = self.value
        cs = coeff_fn(a0, self.order)
        delta = Jet(self.nvars, self.order, dict(self.coeffs))
        z = (0,) * self.nvars
        delta.coeffs.pop(z, None)
        # Horner on the truncated series in delta
        out = Jet.constant(cs[self.order], self.nvars, self.order)
        for k in range(self.order - 1, -1, -1):
            out = out * delta + cs[k]
        return out


def _ones_like(v):
    if isinstance(v, Var):
        return np.ones_like(v.value)
    return np.ones_like(np.asarray(v, dtype=float))


# Taylor coefficient rules -------------------------------------------------

def _tanh_coeffs(a0, order):
    y = _tanh(a0)
    s = 1.0 - y * y          # tanh'
    cs = [y]
    if order >= 1:
        cs.append(s)
    if order >= 2:
        cs.append(-y * s)
    if order >= 3:
        cs.append(s * (3.0 * y * y - 1.0) * (1.0 / 3.0))
    if order >= 4:
        cs.append(s * (2.0 * y - 3.0 * y * y * y) * (1.0 / 3.0))
    if order >= 5:
        raise UnsupportedOrderError("tanh jets implemented up to order 4")
    return cs


def _exp_coeffs(a0, order):
    e = _exp(a0)
    return [e * (1.0 / math.factorial(k)) for k in range(order + 1)]


def _log_coeffs(a0, order):
    cs = [_log(a0)]
    inv = 1.0 / a0
    p = inv
    for k in range(1, order + 1):
        cs.append(((-1.0) ** (k - 1) / k) * p)
        if k < order:
            p = p * inv
    return cs


def _sqrt_coeffs(a0, order):
    c = _sqrt(a0)
    cs = [c]
    inv = 1.0 / a0
    for k in range(1, order + 1):
        c = c * ((0.5 - (k - 1)) / k) * inv
        cs.append(c)
    return cs


def _recip_coeffs(a0, order):
    inv = 1.0 / a0
    cs = [inv]
    c = inv
    for _ in range(order):
        c = -c * inv
        cs.append(c)
    return cs


def _relu_coeffs(a0, order):
    ind = _step(a0)
    cs = [a0 * ind]
    if order >= 1:
        cs.append(ind)
    cs.extend([0.0] * max(0, order - 1))
    return cs


def _scaled_exp_coeffs(a0, order):
    # f(x) = sign(x) (exp|x| - 1); f' = exp|x|, f'' = sign exp|x|, ...
    s = _sign(a0)
    e = _exp(s * a0)
    cs = [s * (e - 1.0)]
    for k in range(1, order + 1):
        d = e if k % 2 == 1 else s * e
        cs.append(d * (1.0 / math.factorial(k)))
    return cs


def _identity_coeffs(a0, order):
    cs = [a0]
    if order >= 1:
        cs.append(_ones_like_or_one(a0))
    cs.extend([0.0] * max(0, order - 1))
    return cs


def _ones_like_or_one(a0):
    if isinstance(a0, Var):
        return 1.0
    return np.ones_like(np.asarray(a0, dtype=float))


ACTIVATION_COEFFS = {
    "tanh": _tanh_coeffs,
    "relu": _relu_coeffs,
    "scaled_exponential": _scaled_exp_coeffs,
    "identity": _identity_coeffs,
    "exp": _exp_coeffs,
}

ACTIVATION_FNS = {
    "tanh": _tanh,
    "relu": _relu,
    "scaled_exponential": lambda x: _sign(x) * (_exp(_sign(x) * x) - 1.0),
    "identity": lambda x: x,
    "exp": _exp,
}


def jet_affine(w, b, jet):
    """Affine layer applied coefficient-wise: W @ jet + b."""
    c = {k: _matmul(w, v) for k, v in jet.coeffs.items()}
    z = (0,) * jet.nvars
    if z in c:
        c[z] = c[z] + b
    else:
        c[z] = b * _ones_like(next(iter(c.values())))
    return Jet(jet.nvars, jet.order, c)


def jet_activation(jet, name):
    return jet.apply(ACTIVATION_COEFFS[name])


# ---------------------------------------------------------------------------
# MLP network
# ---------------------------------------------------------------------------

@dataclass
class MlpNetwork:
    """Dense multilayer perceptron.

    weights[i] has shape (layer_widths[i+1], layer_widths[i]); biases[i]
    has shape (layer_widths[i+1],).  The hidden activation is applied after
    every layer except the last, which uses `output_activation`.
    """

    layer_widths: list
    weights: list
    biases: list
    hidden_activation: str = "tanh"
    output_activation: str = "identity"

    def __post_init__(self):
        if len(self.weights) != len(self.layer_widths) - 1:
            raise ConfigurationError("weight count does not match layer widths")
        for i, (w, b) in enumerate(zip(self.weights, self.biases)):
            want = (self.layer_widths[i + 1], self.layer_widths[i])
            if w.shape != want:
                raise ConfigurationError(
                    f"layer {i}: weight shape {w.shape} != {want}")
            if b.shape != (self.layer_widths[i + 1],):
                raise ConfigurationError(f"layer {i}: bias shape {b.shape}")
        if self.output_activation not in ACTIVATION_FNS:
            raise ConfigurationError(
                f"unknown output activation {self.output_activation!r}")

    @classmethod
    def create(cls, layer_widths, rng, hidden_activation="tanh",
               output_activation="identity"):
        weights, biases = [], []
        for nin, nout in zip(layer_widths[:-1], layer_widths[1:]):
            weights.append(glorot_init((nout, nin), rng))
            biases.append(np.zeros(nout))
        return cls(list(layer_widths), weights, biases,
                   hidden_activation, output_activation)

    @classmethod
    def default_architecture(cls, n_inputs, n_outputs, rng,
                             output_activation="identity"):
        """4 hidden layers of 20 neurons."""
        widths = [n_inputs] + [20] * 4 + [n_outputs]
        return cls.create(widths, rng, output_activation=output_activation)

    # -- plain numpy forward ------------------------------------------------

    def __call__(self, x):
        return forward(self, x)

    # -- parameter handling -------------------------------------------------

    def parameters(self):
        return list(self.weights) + list(self.biases)

    def set_parameters(self, params):
        n = len(self.weights)
        self.weights = [np.asarray(p) for p in params[:n]]
        self.biases = [np.asarray(p) for p in params[n:]]

    def tape_parameters(self, tape):
        """Leaf Vars for every weight/bias, in `parameters()` order.

        Biases are lifted as column vectors so they broadcast over batches.
        """
        return ([tape.var(w) for w in self.weights]
                + [tape.var(b.reshape(-1, 1)) for b in self.biases])

    def parameter_grads(self, adjoints, param_vars):
        """Extract gradients for `parameters()` from a backward pass."""
        grads = []
        for p, v in zip(self.parameters(), param_vars):
            g = adjoints[v.i]
            grads.append(np.zeros_like(p) if g is None else g.reshape(p.shape))
        return grads

    # -- jet forward --------------------------------------------------------

    def jet_forward(self, input_jet, params=None):
        """Propagate an input jet (coefficients shaped (n_in, batch))."""
        if params is None:
            ws, bs = self.weights, self.biases
        else:
            n = len(self.weights)
            ws, bs = params[:n], params[n:]
        a = input_jet
        last = len(ws) - 1
        for i, (w, b) in enumerate(zip(ws, bs)):
            # tape biases are already column vectors (see tape_parameters)
            bcol = b if isinstance(b, Var) else b.reshape(-1, 1)
            a = jet_affine(w, bcol, a)
            name = self.output_activation if i == last else self.hidden_activation
            a = jet_activation(a, name)
        return a


def forward(net: MlpNetwork, inputs, tape: Tape | None = None):
    """Evaluate the network.

    `inputs` is a vector of length n_in or an array (n_in, batch).  When a
    `tape` is passed, the computation is recorded and a `Var` is returned.
    """
    x = np.asarray(inputs, dtype=float)
    single = x.ndim == 1
    if x.shape[0] != net.layer_widths[0]:
        raise ConfigurationError(
            f"input length {x.shape[0]} != first layer width "
            f"{net.layer_widths[0]}")
    a = x.reshape(-1, 1) if single else x
    if tape is not None:
        a = tape.constant(a)
        ws = [tape.var(w) for w in net.weights]
        bs = [tape.var(b.reshape(-1, 1)) for b in net.biases]
    else:
        ws = net.weights
        bs = [b.reshape(-1, 1) for b in net.biases]
    last = len(ws) - 1
    for i, (w, b) in enumerate(zip(ws, bs)):
        a = w @ a + b
        name = net.output_activation if i == last else net.hidden_activation
        a = ACTIVATION_FNS[name](a)
    if tape is not None:
        return a
    return a[:, 0] if single else a


def derivative(net: MlpNetwork, inputs, multi_index):
    """Exact partial derivative of the (scalar) network output.

    `multi_index` gives the derivative order for each input; the total
    order must not exceed 3.
    """
    x = np.asarray(inputs, dtype=float)
    idx = tuple(int(k) for k in multi_index)
    if len(idx) != x.shape[0]:
        raise ConfigurationError("multi-index length must match input length")
    if any(k < 0 for k in idx):
        raise UnsupportedOrderError("negative derivative order")
    total = sum(idx)
    if total > 3:
        raise UnsupportedOrderError(
            f"total derivative order {total} > 3 not supported")
    if total == 0:
        out = forward(net, x)
        return float(out[0]) if out.size == 1 else out
    active = [i for i, k in enumerate(idx) if k > 0]
    nvars = max(len(active), 1)
    order = max(total, 1)
    xcol = x.reshape(-1, 1)
    coeffs = {(0,) * nvars: xcol}
    for v, i in enumerate(active):
        e = tuple(1 if j == v else 0 for j in range(nvars))
        seed = np.zeros_like(xcol)
        seed[i, 0] = 1.0
        coeffs[e] = seed
    jet = Jet(nvars, order, coeffs)
    out = net.jet_forward(jet)
    want = tuple(idx[i] for i in active) if active else (0,) * nvars
    d = out.deriv(want)
    d = np.asarray(d)
    return float(d.reshape(-1)[0]) if d.size == 1 else d[:, 0]


def network_input_jet(inputs, jet_vars, order):
    """Build the input jet for `jet_forward`.

    `inputs` has shape (n_in, batch); `jet_vars` lists the input rows that
    become jet variables (in variable order).
    """
    x = np.asarray(inputs, dtype=float)
    nvars = len(jet_vars)
    coeffs = {(0,) * nvars: x}
    for v, row in enumerate(jet_vars):
        e = tuple(1 if j == v else 0 for j in range(nvars))
        seed = np.zeros_like(x)
        seed[row, :] = 1.0
        coeffs[e] = seed
    return Jet(nvars, order, coeffs)


# ---------------------------------------------------------------------------
# Initialization and optimization
# ---------------------------------------------------------------------------

def glorot_init(shape, rng):
    """Glorot-normal matrix: N(0, 2/(fan_in + fan_out))."""
    if len(shape) != 2 or shape[0] <= 0 or shape[1] <= 0:
        raise ConfigurationError(f"invalid weight shape {shape}")
    fan_out, fan_in = shape
    std = math.sqrt(2.0 / (fan_in + fan_out))
    return rng.normal(0.0, std, size=shape)


@dataclass
class AdamState:
    """Adam moments plus the rectified (warm-up then cosine) lr schedule."""

    m: list
    v: list
    t: int = 0
    lr0: float = 0.015
    total_steps: int = 10000
    warmup_frac: float = 0.05
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    @classmethod
    def for_parameters(cls, params, lr0=0.015, total_steps=10000):
        return cls(m=[np.zeros_like(p) for p in params],
                   v=[np.zeros_like(p) for p in params],
                   lr0=lr0, total_steps=total_steps)

    def learning_rate(self):
        """Schedule: linear warm-up from lr0/10 over the first 5% of steps,
        then cosine decay to lr0/100."""
        warm = max(1, int(self.warmup_frac * self.total_steps))
        if self.t < warm:
            return self.lr0 / 10.0 + (self.lr0 - self.lr0 / 10.0) * self.t / warm
        frac = min(1.0, (self.t - warm) / max(1, self.total_steps - warm))
        lo = self.lr0 / 100.0
        return lo + (self.lr0 - lo) * 0.5 * (1.0 + math.cos(math.pi * frac))


def adam_step(params, grads, state: AdamState):
    """One Adam update; mutates `params` in place and returns them."""
    for p, g in zip(params, grads):
        if p.shape != g.shape:
            raise ConfigurationError("parameter/gradient shape mismatch")
        if not np.all(np.isfinite(g)):
            raise TrainingDivergedError("non-finite gradient encountered")
    lr = state.learning_rate()
    state.t += 1
    b1, b2 = state.beta1, state.beta2
    bc1 = 1.0 - b1 ** state.t
    bc2 = 1.0 - b2 ** state.t
    for i, (p, g) in enumerate(zip(params, grads)):
        state.m[i] = b1 * state.m[i] + (1 - b1) * g
        state.v[i] = b2 * state.v[i] + (1 - b2) * g * g
        mhat = state.m[i] / bc1
        vhat = state.v[i] / bc2
        p -= lr * mhat / (np.sqrt(vhat) + state.eps)
    return params


# ---------------------------------------------------------------------------
# Checkpoint I/O
# ---------------------------------------------------------------------------

CHECKPOINT_FORMAT = "compliantwing-mlp-1"


def save_network(net: MlpNetwork, path):
    """Write a bit-exact network checkpoint (npz)."""
    arrays = {
        "format": np.array(CHECKPOINT_FORMAT),
        "layer_widths": np.array(net.layer_widths, dtype=np.int64),
        "hidden_activation": np.array(net.hidden_activation),
        "output_activation": np.array(net.output_activation),
    }
    for i, w in enumerate(net.weights):
        arrays[f"w{i}"] = w
    for i, b in enumerate(net.biases):
        arrays[f"b{i}"] = b
    np.savez(path, **arrays)


def load_network(path) -> MlpNetwork:
    with np.load(path, allow_pickle=False) as z:
        fmt = str(z["format"])
        if fmt != CHECKPOINT_FORMAT:
            raise ConfigurationError(f"unknown checkpoint format {fmt!r}")
        widths = [int(w) for w in z["layer_widths"]]
        n = len(widths) - 1
        weights = [z[f"w{i}"] for i in range(n)]
        biases = [z[f"b{i}"] for i in range(n)]
        return MlpNetwork(widths, weights, biases,
                          str(z["hidden_activation"]),
                          str(z["output_activation"]))
