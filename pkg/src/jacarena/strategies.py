"""Prover strategies, strategy combinators, and Delayer adversaries.

Prover strategies are deterministic move generators: ``propose`` yields this
round's elements, ``receive`` consumes the Delayer's replies and returns the
declared next budget together with a continuation strategy.  Correctness is
enforced semantically by the referee's leaf check, so combinators only have
to produce the right moves.  Declared budgets are clamped to stay strictly
below the current position budget; a starved strategy plays on and simply
loses.
"""

from __future__ import annotations

import random
import re

from .algebra import Polynomial
from .errors import (
    BudgetOverflow,
    NotInJacobsonRadical,
    UnsupportedRing,
    WrongBudget,
)
from .rings import (
    MonogenicExtension,
    RingPresentation,
    integral_dependence,
    key_elementary_transfer,
    member_in,
    zero_dim_witness,
)


class ProverStrategy:
    """Base move generator; subclasses override propose/receive."""

    def __init__(self, ring, x, xprime, budget, name):
        self.ring = ring
        self.x = x
        self.xprime = xprime
        self.budget = budget
        self.name = name

    def propose(self, pos):
        return []

    def receive(self, pos, moves, replies):
        return self._declare(pos, 0), self

    @staticmethod
    def _declare(pos, want):
        return max(0, min(want, pos.tau - 1))

    def __repr__(self):
        return f"<strategy {self.name} on {self.ring.to_text()}>"


class ImmediateWinStrategy(ProverStrategy):
    """Never moves; relies on the leaf check already holding."""

    def __init__(self, ring, x, xprime):
        super().__init__(ring, x, xprime, 0, "immediate")


class ZeroDimStrategy(ProverStrategy):
    """One-round strategy from a witness x^e(1 - a*x) = 0.

    Whatever b answers the move a, x^e = x^e(1 - b(1 - a*x)) puts x^e in the
    ideal of the single constraint.
    """

    def __init__(self, ring, x):
        super().__init__(ring, x, x, 1, "zeroDim")
        self.exponent, self.move = zero_dim_witness(x)

    def propose(self, pos):
        return [self.move]

    def receive(self, pos, moves, replies):
        return self._declare(pos, 0), ImmediateWinStrategy(self.ring, self.x, self.xprime)


def zero_dim_strategy(ring, x):
    return ZeroDimStrategy(ring, ring.element(x))


class EuclideanDim1Strategy(ProverStrategy):
    """Two-round strategy for ZZ and K[X]: force a nonzero constraint, then
    finish with a zero-dimensional witness in the finite quotient."""

    def __init__(self, ring, x):
        super().__init__(ring, x, x, 2, "euclideanDim1")
        base = ring.base
        if ring.relations or (base.kind == "ZZ" and ring.vars) or (
            base.kind != "ZZ" and len(ring.vars) > 1
        ):
            raise UnsupportedRing(
                f"euclideanDim1 covers ZZ and K[X] presentations, not {ring.to_text()}"
            )
        if x.is_zero():
            self.move = None
            return
        poly = x.poly
        if base.kind == "ZZ":
            n = poly.constant_value()
            if n in (1, -1):
                self.move = x
            else:
                self.move = ring.element(-1 if n > 0 else 1)
        else:
            if poly.is_constant():
                self.move = ring.element(base.invert(poly.constant_value()))
            else:
                self.move = ring.one()

    def propose(self, pos):
        return [] if self.move is None else [self.move]

    def receive(self, pos, moves, replies):
        if self.move is None or pos.tau <= 1:
            return self._declare(pos, 0), ImmediateWinStrategy(self.ring, self.x, self.xprime)
        b = replies[0]
        m = self.ring.one() - b * (self.ring.one() - self.move * self.x)
        quotient = self.ring.quotient_extend([m])
        inner = ZeroDimStrategy(quotient, quotient.element(self.x.poly))
        cont = _Bridge(self.ring, self.x, self.xprime, 1, inner, self.name)
        return self._declare(pos, 1), cont


def euclidean_dim1_strategy(ring, x):
    return EuclideanDim1Strategy(ring, ring.element(x))


class _Bridge(ProverStrategy):
    """Play a strategy that lives over another presentation of the same
    ambient polynomials; moves and replies cross by representative."""

    def __init__(self, ring, x, xprime, budget, sub, name):
        super().__init__(ring, x, xprime, budget, name)
        self.sub = sub

    def propose(self, pos):
        return [self.ring.element(m.poly) for m in self.sub.propose(pos)]

    def receive(self, pos, moves, replies):
        sub_moves = [self.sub.ring.element(m.poly) for m in moves]
        sub_replies = [self.sub.ring.element(b.poly) for b in replies]
        declared, cont = self.sub.receive(pos, sub_moves, sub_replies)
        return (
            self._declare(pos, declared),
            _Bridge(self.ring, self.x, self.xprime, declared, cont, self.name),
        )


def quotient_push(strategy, extra):
    """Transport a strategy along a quotient: same moves, larger relation ideal."""
    ring = strategy.ring.quotient_extend(extra)
    return _Bridge(
        ring,
        ring.element(strategy.x.poly),
        ring.element(strategy.xprime.poly),
        strategy.budget,
        strategy,
        strategy.name,
    )


class CutStrategy(ProverStrategy):
    """Interleave a strategy for (A, y, x*z) with one for (A/<x>, y, z).

    Each round plays the concatenation of both sub-strategies' moves and
    splits the replies back; the declared budget is the max of the two.
    """

    def __init__(self, s1, s2, x_cut, name=None):
        budget = max(s1.budget, s2.budget)
        super().__init__(
            s1.ring,
            s1.x,
            s1.ring.element(s2.xprime.poly),
            budget,
            name or f"cut({s1.name}|{s2.name})",
        )
        self.s1 = s1
        self.s2 = s2
        self.x_cut = x_cut

    def propose(self, pos):
        lifted = [self.ring.element(m.poly) for m in self.s2.propose(pos)]
        return list(self.s1.propose(pos)) + lifted

    def receive(self, pos, moves, replies):
        if pos.tau <= 1:
            return 0, ImmediateWinStrategy(self.ring, self.x, self.xprime)
        n1 = len(self.s1.propose(pos))
        b1, c1 = self.s1.receive(pos, moves[:n1], replies[:n1])
        down_m = [self.s2.ring.element(m.poly) for m in moves[n1:]]
        down_r = [self.s2.ring.element(b.poly) for b in replies[n1:]]
        b2, c2 = self.s2.receive(pos, down_m, down_r)
        declared = max(b1, b2)
        if declared >= pos.tau:
            raise BudgetOverflow(
                f"cut continuation needs budget {declared} at position {pos.tau}"
            )
        return declared, CutStrategy(c1, c2, self.x_cut, self.name)


def cut_combinator(s1, s2, x_cut):
    return CutStrategy(s1, s2, x_cut)


class ScaleStrategy(ProverStrategy):
    """Turn a strategy for (A, x*y, x') into one for (A, x, x'*z) by
    multiplying every declared move by y."""

    def __init__(self, sub, y, z, x=None):
        super().__init__(
            sub.ring,
            x if x is not None else sub.x,
            sub.xprime * z,
            sub.budget,
            sub.name,
        )
        self.sub = sub
        self.y_factor = y
        self.z_factor = z

    def propose(self, pos):
        return [m * self.y_factor for m in self.sub.propose(pos)]

    def receive(self, pos, moves, replies):
        inner_moves = self.sub.propose(pos)
        declared, cont = self.sub.receive(pos, inner_moves, replies)
        return declared, ScaleStrategy(cont, self.y_factor, self.z_factor, self.x)


def scale_combinator(sub, y, z, x=None):
    return ScaleStrategy(sub, y, z, x)


class IntegralTransportStrategy(ProverStrategy):
    """Play a base-ring strategy inside a monogenic extension.

    A declared base move a1 becomes the extension move a1*a; each extension
    reply b2 is converted back into a base reply via the localization
    transfer, whose output constraint lies in the ideal of the extension
    constraint.
    """

    def __init__(self, ring, sub, a, a0, ext):
        x = ring.element(a0.poly)
        super().__init__(ring, x, ring.element((a * a0).poly), sub.budget, sub.name)
        self.sub = sub
        self.a = a
        self.a0 = a0
        self.ext = ext

    def propose(self, pos):
        return [
            self.ring.element((a1 * self.a).poly) for a1 in self.sub.propose(pos)
        ]

    def receive(self, pos, moves, replies):
        if pos.tau <= 1:
            return 0, ImmediateWinStrategy(self.ring, self.x, self.xprime)
        inner_moves = self.sub.propose(pos)
        inner_replies = [
            key_elementary_transfer(self.a, self.a0, a1, b2, self.ext)
            for a1, b2 in zip(inner_moves, replies)
        ]
        declared, cont = self.sub.receive(pos, inner_moves, inner_replies)
        return declared, IntegralTransportStrategy(
            self.ring, cont, self.a, self.a0, self.ext
        )


def loc_integral_strategy(ring, y, rel, sub_factory, ext):
    """Strategy for (B, y, a*y) from a dependence a^l y^d = sum c_j y^j.

    Descends the chain B = B_d, B_{k-1} = B_k / <f_{k-1}> with
    f_k = a^l y^k - (c_{d-1} y^{k-1} + ... + c_{d-k}); each level transports
    the base strategy for a*c_{d-k}, rescales moves by f_{k-1}, and closes
    with a cut on f_{k-1}.  Level zero wins outright since f_0 = a^l dies.
    """
    base = ext.base
    a, l, d, cs = rel.a, rel.l, rel.d, rel.coeffs

    def f_raw(k):
        acc = a.poly ** l * y.poly ** k
        for j in range(1, k + 1):
            acc = acc - cs[d - j].poly * y.poly ** (k - j)
        return acc

    def build(k, ring_k):
        y_k = ring_k.element(y.poly)
        ay_k = ring_k.element((a.poly * y.poly))
        if k == 0:
            return ImmediateWinStrategy(ring_k, y_k, ay_k)
        a0 = cs[d - k]
        ext_k = MonogenicExtension(base, ring_k, ext.var, ext.relation)
        sub = sub_factory(d - k)
        transported = IntegralTransportStrategy(ring_k, sub, a, a0, ext_k)
        f_prev = ring_k.element(f_raw(k - 1))
        rescaled = ScaleStrategy(transported, f_prev, ring_k.one(), x=y_k)
        lower = build(k - 1, ring_k.quotient_extend([f_prev]))
        return CutStrategy(rescaled, lower, f_prev, name=transported.name)

    return build(d, ring)


class PolyLiftStrategy(ProverStrategy):
    """Quantitative lift: from a strategy factory for the coefficient ring A
    (budget b) to a strategy for (A[X], f, f) at budget b + 1.

    Round one declares the single move X; the reply g pins the constraint
    h = 1 - g(1 - X f), and the continuation walks the chain
    C_k = A[X]/<h, a_{k+1}, ..., a_d> over the X-coefficients a_j of h,
    cutting on each a_k with an integral-transport strategy for (C_k, f, a_k f).
    """

    def __init__(self, factory, f):
        ring = f.ring
        if not ring.vars:
            raise UnsupportedRing("polynomial lift needs an adjoined variable")
        self.var = ring.vars[-1]
        for r in ring.relations:
            if r.degree_in(self.var) > 0:
                raise UnsupportedRing(
                    f"relation {r.to_text()} involves the lift variable {self.var!r}"
                )
        super().__init__(ring, f, f, factory.budget + 1, f"polyLift({factory.name})")
        self.factory = factory
        avars = ring.vars[:-1]
        self.coeff_ring = RingPresentation(
            ring.base, avars, [r.remap(avars) for r in ring.relations], ring.order.kind
        )

    def propose(self, pos):
        if self.x.is_zero():
            return []
        return [self.ring.element(Polynomial.variable(self.ring.base, self.var, self.ring.vars))]

    def receive(self, pos, moves, replies):
        if self.x.is_zero() or pos.tau <= 1:
            return self._declare(pos, 0), ImmediateWinStrategy(self.ring, self.x, self.xprime)
        g = replies[0]
        h = self.ring.one() - g * (self.ring.one() - moves[0] * self.x)
        declared = self._declare(pos, self.factory.budget)
        cont = _Bridge(
            self.ring, self.x, self.xprime, declared, self._chain_for(h), self.name
        )
        return declared, cont

    def _chain_for(self, h):
        ring, f = self.ring, self.x
        if h.is_zero():
            return ImmediateWinStrategy(ring, f, f)
        split = h.poly.coefficients_in(self.var)
        degree = max(split)
        coeffs = {
            j: split.get(j, Polynomial.zero(ring.base, self.coeff_ring.vars))
            for j in range(degree + 1)
        }

        def chain(k, ring_k, base_k):
            f_k = ring_k.element(f.poly)
            if k == -1:
                return ImmediateWinStrategy(ring_k, f_k, f_k)
            a_k = base_k.element(coeffs[k])
            lower_ring = ring_k.quotient_extend([ring_k.element(coeffs[k].remap(ring_k.vars))])
            lower_base = base_k.quotient_extend([a_k])
            deeper = chain(k - 1, lower_ring, lower_base)
            if a_k.is_zero():
                side = ImmediateWinStrategy(ring_k, f_k, ring_k.zero())
            else:
                rel_poly = Polynomial.zero(ring.base, ring.vars)
                xvar = Polynomial.variable(ring.base, self.var, ring.vars)
                for j in range(k + 1):
                    rel_poly = rel_poly + base_k.element(coeffs[j]).poly.remap(ring.vars) * xvar ** j
                ext_k = MonogenicExtension(base_k, ring_k, self.var, rel_poly)
                dep = integral_dependence(f_k, ext_k)

                def sub_factory(idx, _base=base_k, _dep=dep):
                    target = _dep.a * _dep.coeffs[idx]
                    pure = self.factory(self.coeff_ring.element(target.poly))
                    return quotient_push(pure, [self.coeff_ring.element(r.remap(self.coeff_ring.vars)) for r in _base.relations[len(self.coeff_ring.relations):]])

                side = loc_integral_strategy(ring_k, f_k, dep, sub_factory, ext_k)
            return CutStrategy(side, deeper, a_k, name=self.name)

        top_ring = ring.quotient_extend([h])
        return chain(degree, top_ring, self.coeff_ring)


def poly_lift_strategy(factory, f):
    return PolyLiftStrategy(factory, f)


class _LeafFactory:
    def __init__(self, ring, kind):
        self.ring = ring
        self.kind = kind
        self.budget = 1 if kind == "zeroDim" else 2
        self.name = kind

    def __call__(self, x):
        x = self.ring.element(x)
        if self.kind == "zeroDim":
            return ZeroDimStrategy(self.ring, x)
        return EuclideanDim1Strategy(self.ring, x)


class _LiftFactory:
    def __init__(self, inner, ring):
        self.inner = inner
        self.ring = ring
        self.budget = inner.budget + 1
        self.name = f"polyLift({inner.name})"

    def __call__(self, x):
        return PolyLiftStrategy(self.inner, self.ring.element(x))


def ring_strategy_factory(ring):
    """Strategy factory for towers base[X_1,...,X_n] with no relations.

    Budget is 1 for a field base, 2 for a ZZ or K[X] base, plus one per
    additional polynomial variable.
    """
    if ring.relations:
        raise UnsupportedRing(f"{ring.to_text()} is not a pure polynomial tower")
    base = ring.base
    n = len(ring.vars)
    if base.kind == "ZZ":
        if n == 0:
            return _LeafFactory(ring, "euclideanDim1")
    else:
        if n == 0:
            return _LeafFactory(ring, "zeroDim")
        if n == 1:
            return _LeafFactory(ring, "euclideanDim1")
    inner_ring = RingPresentation(base, ring.vars[:-1], (), ring.order.kind)
    return _LiftFactory(ring_strategy_factory(inner_ring), ring)


class FixedMovesProver(ProverStrategy):
    """Scripted Prover: plays the given move lists round by round."""

    def __init__(self, ring, x, rounds, index=0, budget=None):
        rounds = [list(r) for r in rounds]
        super().__init__(
            ring, ring.element(x), ring.element(x),
            len(rounds) if budget is None else budget, "scripted",
        )
        self.rounds = rounds
        self.index = index

    def propose(self, pos):
        if self.index < len(self.rounds):
            return [self.ring.element(m) for m in self.rounds[self.index]]
        return []

    def receive(self, pos, moves, replies):
        want = max(0, len(self.rounds) - self.index - 1)
        cont = FixedMovesProver(self.ring, self.x, self.rounds, self.index + 1, self.budget)
        return self._declare(pos, want), cont


class DelayerStrategy:
    name = "delayer"

    def reply(self, pos, moves):
        raise NotImplementedError


class RandomDelayer(DelayerStrategy):
    """Seeded pseudo-random replies within per-variable degree and size bounds."""

    def __init__(self, ring, seed, deg_le=0, abs_le=1):
        self.ring = ring
        self.seed = seed
        self.deg_le = deg_le
        self.abs_le = abs_le
        self.rng = random.Random(seed)
        self.name = f"random(seed={seed},degLE={deg_le},absLE={abs_le})"

    def _random_element(self):
        nvars = len(self.ring.vars)
        monos = [()]
        for _ in range(nvars):
            monos = [m + (e,) for m in monos for e in range(self.deg_le + 1)]
        terms = {}
        for exps in monos:
            c = self.rng.randint(-self.abs_le, self.abs_le)
            if c:
                terms[exps] = c
        return self.ring.element(Polynomial(self.ring.base, self.ring.vars, terms))

    def reply(self, pos, moves):
        return [self._random_element() for _ in moves]


class ScriptedDelayer(DelayerStrategy):
    """Fixed replies per round; cycles its last entry if the match runs longer."""

    def __init__(self, ring, rounds):
        self.ring = ring
        self.rounds = [list(r) for r in rounds]
        self.index = 0
        self.name = "scripted"

    def reply(self, pos, moves):
        script = self.rounds[min(self.index, len(self.rounds) - 1)] if self.rounds else []
        self.index += 1
        out = []
        for i in range(len(moves)):
            value = script[i] if i < len(script) else 0
            out.append(self.ring.element(value))
        return out


class ConstantDelayer(DelayerStrategy):
    def __init__(self, ring, value):
        self.ring = ring
        self.value = ring.element(value)
        self.name = f"constant({self.value.to_text()})"

    def reply(self, pos, moves):
        return [self.value for _ in moves]


class EchoDelayer(DelayerStrategy):
    """Replies b := a, a cheap adversary that stresses move handling."""

    name = "echo"

    def __init__(self, ring):
        self.ring = ring

    def reply(self, pos, moves):
        return list(moves)


class JacWitnessDelayer(DelayerStrategy):
    """Answers each move a with the cofactor of 1 - a*x in 1 = sum c_i u_i + q(1 - a*x).

    The resulting constraint then lies in the ideal of the base set, which
    is what certificate extraction rewrites along.  Raises
    NotInJacobsonRadical at the first move where no witness exists.
    """

    def __init__(self, ring, x, base_constraints):
        self.ring = ring
        self.x = ring.element(x)
        self.base = [ring.element(u) for u in base_constraints]
        self.witnesses = []
        self.name = "jacWitness(" + ";".join(u.to_text() for u in self.base) + ")"

    def reply(self, pos, moves):
        out = []
        one = self.ring.one()
        for a in moves:
            probe = one - a * self.x
            cofs = member_in(self.ring, one, self.base + [probe])
            if cofs is None:
                raise NotInJacobsonRadical(a)
            b = self.ring.element(cofs[-1])
            constraint = one - b * probe
            witness = member_in(self.ring, constraint, self.base)
            if witness is None:
                raise AssertionError("witness constraint escaped the base ideal")
            self.witnesses.append(witness)
            out.append(b)
        return out


def delayer_random(ring, seed, deg_le=0, abs_le=1):
    return RandomDelayer(ring, seed, deg_le, abs_le)


def delayer_jac_witness(ring, x, base_constraints):
    return JacWitnessDelayer(ring, x, base_constraints)


class DiagonalRefuterZ(DelayerStrategy):
    """Lower-bound adversary on (ZZ, N, N) at budget one.

    Replies force every constraint to equal c = 1 + |N(1-a_1 N)...(1-a_n N)|,
    and c has a prime factor missing from N, so N is not nilpotent modulo c.
    """

    def __init__(self, ring, n_value):
        if ring.base.kind != "ZZ" or ring.vars or ring.relations:
            raise UnsupportedRing("refuterZ plays on the plain integers")
        if abs(n_value) < 2:
            raise ValueError("|N| must be at least 2")
        self.ring = ring
        self.n_value = n_value
        self.name = "refuterZ"

    @staticmethod
    def forced_constant(n_value, move_values):
        product = n_value
        for a in move_values:
            product *= 1 - a * n_value
        return 1 + abs(product)

    def reply(self, pos, moves):
        if pos.tau != 1:
            raise WrongBudget(f"refuterZ covers budget 1, invoked at {pos.tau}")
        values = [m.poly.constant_value() if not m.poly.is_zero() else 0 for m in moves]
        c = self.forced_constant(self.n_value, values)
        out = []
        for a in values:
            q, r = divmod(1 - c, 1 - a * self.n_value)
            if r != 0:
                raise AssertionError("diagonal reply division was not exact")
            out.append(self.ring.element(q))
        return out

    @staticmethod
    def check_not_nil(c, n_value):
        """Repeated gcd stripping: True iff some prime of c misses N."""
        import math

        c0 = abs(c)
        while True:
            g = math.gcd(c0, abs(n_value))
            if g == 1:
                break
            while c0 % g == 0:
                c0 //= g
        return c0 > 1


def diagonal_refuter_Z(ring, n_value):
    return DiagonalRefuterZ(ring, n_value)


class DiagonalRefuterPoly(DelayerStrategy):
    """Lower-bound adversary on (A[X], X, X) at budget one.

    The reply to move f_i is g_i = X * prod_{j != i} (1 - f_j X), making every
    constraint equal h = 1 - X(1 - f_1 X)...(1 - f_n X); over a nontrivial A
    no power of X lies in <h>.
    """

    def __init__(self, ring):
        if not ring.vars:
            raise UnsupportedRing("refuterPoly plays on a polynomial ring")
        self.ring = ring
        self.var = ring.vars[-1]
        self.name = "refuterPoly"

    def reply(self, pos, moves):
        if pos.tau != 1:
            raise WrongBudget(f"refuterPoly covers budget 1, invoked at {pos.tau}")
        xvar = self.ring.element(
            Polynomial.variable(self.ring.base, self.var, self.ring.vars)
        )
        one = self.ring.one()
        out = []
        for i in range(len(moves)):
            g = xvar
            for j, f in enumerate(moves):
                if j != i:
                    g = g * (one - f * xvar)
            out.append(g)
        return out

    def forced_constraint(self, moves):
        xvar = self.ring.element(
            Polynomial.variable(self.ring.base, self.var, self.ring.vars)
        )
        h = xvar
        for f in moves:
            h = h * (self.ring.one() - f * xvar)
        return self.ring.one() - h


def diagonal_refuter_poly(ring):
    return DiagonalRefuterPoly(ring)


_RANDOM_SPEC = re.compile(
    r"random\(seed=(-?\d+),degLE=(\d+),absLE=(\d+)\)$|random:(-?\d+)(?::(\d+))?(?::(\d+))?$"
)


def delayer_from_spec(spec, ring, x):
    spec = spec.strip()
    m = _RANDOM_SPEC.match(spec)
    if m:
        if m.group(1) is not None:
            seed, deg, bound = int(m.group(1)), int(m.group(2)), int(m.group(3))
        else:
            seed = int(m.group(4))
            deg = int(m.group(5)) if m.group(5) else 0
            bound = int(m.group(6)) if m.group(6) else 1
        return RandomDelayer(ring, seed, deg, bound)
    if spec == "refuterZ":
        value = x.poly.constant_value() if not x.poly.is_zero() else 0
        return DiagonalRefuterZ(ring, value)
    if spec == "refuterPoly":
        return DiagonalRefuterPoly(ring)
    if spec == "echo":
        return EchoDelayer(ring)
    if spec.startswith("constant(") and spec.endswith(")"):
        return ConstantDelayer(ring, ring.element(spec[len("constant(") : -1]))
    if spec.startswith("jacWitness(") and spec.endswith(")"):
        inner = spec[len("jacWitness(") : -1]
        base = [ring.element(part) for part in inner.split(";") if part.strip()]
        return JacWitnessDelayer(ring, x, base)
    raise UnsupportedRing(f"unknown delayer spec {spec!r}")


def _factory_from_spec(spec, ring):
    spec = spec.strip()
    if spec == "auto":
        return ring_strategy_factory(ring)
    if spec == "zeroDim":
        return _LeafFactory(ring, "zeroDim")
    if spec == "euclideanDim1":
        return _LeafFactory(ring, "euclideanDim1")
    if spec.startswith("polyLift(") and spec.endswith(")"):
        if not ring.vars:
            raise UnsupportedRing("polyLift needs at least one variable")
        inner_ring = RingPresentation(
            ring.base, ring.vars[:-1], [r.remap(ring.vars[:-1]) for r in ring.relations],
            ring.order.kind,
        )
        inner = _factory_from_spec(spec[len("polyLift(") : -1], inner_ring)
        return _LiftFactory(inner, ring)
    raise UnsupportedRing(f"unknown prover spec {spec!r}")


def prover_from_spec(spec, ring, x, xprime, budget):
    factory = _factory_from_spec(spec, ring)
    return factory(x)
