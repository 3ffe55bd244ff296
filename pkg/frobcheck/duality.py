"""Dual situations, Frobenius algebras and monoidal comonoidal transformations in Mat(Q).

Frobenius monoidal functors preserve all three: :py:func:`transport_dual` carries a dual situation through a functor,
:py:func:`apply_functor_to_algebra` a Frobenius algebra, and :py:func:`mate_inverse` builds the inverse of a monoidal
and comonoidal transformation out of a dual situation.
"""
import logging

from typing import Optional

from frobcheck import CoverageError, FixtureError, FrobcheckError, ShapeError, UnsupportedStructureError
from frobcheck import linalg
from frobcheck.functor import as_table, ComponentTable, describe_morphism, FrobFunctorData, ObjectGrid
from frobcheck.linalg import format_shape, RatMatrix
from frobcheck.monoidal import CategoryInstance, cyclic_base, FiniteBase, Mat, MATQ, MatQ, MonObject
from frobcheck.report import format_location, Report


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""


def _expect(name: str, matrix: RatMatrix, shape, what: str) -> RatMatrix:
    """Return the matrix if it has the given shape, raise ShapeError otherwise."""
    if matrix.shape != tuple(shape):
        raise ShapeError('{what} {name} must be {rows}x{cols}, got {shape}'.format(
            what=what, name=name, rows=shape[0], cols=shape[1], shape=format_shape(matrix)))
    return matrix


class DualSituation:
    """A dual situation ``(A, B, e: A⊗B -> I, n: I -> B⊗A)`` in ``Mat(Q)``.

    The triangle identities are checked by :py:func:`check_triangles`, not enforced at construction.
    """

    def __init__(self, left: Mat, right: Mat, e: RatMatrix, n: RatMatrix, name: str = 'D'):
        """Constructor.

        Arguments:
            left (frobcheck.monoidal.Mat): the object ``A``.
            right (frobcheck.monoidal.Mat): the object ``B``.
            e (frobcheck.linalg.RatMatrix): the evaluation, ``1 x AB``.
            n (frobcheck.linalg.RatMatrix): the coevaluation, ``BA x 1``.
            name (str, optional): the name used in reports.

        Raises:
            frobcheck.ShapeError: if the shapes do not match the objects.

        """
        self.left = left
        self.right = right
        self.name = name
        self.e = _expect('e', e, (1, left.dim * right.dim), 'Evaluation')
        self.n = _expect('n', n, (right.dim * left.dim, 1), 'Coevaluation')

    def __repr__(self) -> str:
        """Representation with the objects."""
        return '<DualSituation {name} ({left}, {right})>'.format(name=self.name, left=self.left, right=self.right)

    def override(self, field: str, matrix: RatMatrix) -> 'DualSituation':
        """Return a copy with ``e`` or ``n`` replaced."""
        if field not in ('e', 'n'):
            raise FrobcheckError("Unknown dual situation field '{field}', expected one of e, n".format(field=field))
        values = {'e': self.e, 'n': self.n}
        values[field] = matrix
        return DualSituation(self.left, self.right, values['e'], values['n'], name=self.name)

    def scaled(self, e_scale=1, n_scale=1) -> 'DualSituation':
        """Return a copy with ``e`` and ``n`` rescaled, still a dual situation when ``e_scale·n_scale = 1``."""
        return DualSituation(self.left, self.right, self.e.scale(e_scale), self.n.scale(n_scale), name=self.name)


def check_triangles(D: DualSituation) -> Report:
    """Verify ``(e⊗1_A)∘(1_A⊗n) = id_A`` and ``(1_B⊗e)∘(n⊗1_B) = id_B``."""
    report = Report()
    id_a, id_b = linalg.identity(D.left.dim), linalg.identity(D.right.dim)
    location = format_location(D.name, D.left, D.right)
    report.check('triangles', 'left', location, lambda: linalg.kron(D.e, id_a) @ linalg.kron(id_a, D.n), lambda: id_a)
    report.check('triangles', 'right', location, lambda: linalg.kron(id_b, D.e) @ linalg.kron(D.n, id_b), lambda: id_b)
    return report


def cupcap(n: int) -> DualSituation:
    """The self-duality of ``Mat(n)`` given by ``e = vec(id)ᵀ`` and ``n = vec(id)``.

    Raises:
        frobcheck.FixtureError: if the generated fixture fails its triangle identities.

    """
    vec = linalg.RatMatrix({(k * n + k, 0): 1 for k in range(n)}, (n * n, 1))
    dual = DualSituation(Mat(n), Mat(n), vec.transpose(), vec, name='cupcap({n})'.format(n=n))
    _accept_fixture(check_triangles(dual), dual.name)
    return dual


def _ensure_covered(D: DualSituation, grid: ObjectGrid, tensors: bool = True) -> None:
    """Raise CoverageError listing the objects of the dual situation, and of their tensors, missing from the grid."""
    required = [D.left, D.right]
    if tensors:
        required += [MATQ.tensor_obj(D.left, D.right), MATQ.tensor_obj(D.right, D.left)]
    missing = sorted({obj for obj in required if obj not in grid})
    if missing:
        raise CoverageError('Grid {grid} misses the objects {missing} of {dual}'.format(
            grid=grid, missing=format_location(*missing), dual=D.name))


def transport_dual(F: FrobFunctorData, D: DualSituation, grid: Optional[ObjectGrid] = None) -> DualSituation:
    """Transport a dual situation through a Frobenius monoidal functor.

    The result is ``(FA, FB, i0∘F(e)∘r_{A,B}, i_{B,A}∘F(n)∘r0)``.

    Arguments:
        F (frobcheck.functor.FrobFunctorData): the functor, on ``Mat(Q)``.
        D (frobcheck.duality.DualSituation): the dual situation.
        grid (frobcheck.functor.ObjectGrid, optional): if given it must contain the objects of ``D`` and their tensors.

    Raises:
        frobcheck.CoverageError: if the grid misses an object of ``D`` or one of their tensors.
        frobcheck.UnsupportedStructureError: if ``F`` is not on ``Mat(Q)`` or has no comonoidal structure.

    """
    if not isinstance(F.source, MatQ):
        raise UnsupportedStructureError('Unable to transport a dual situation of Mat(Q) through {name} on {cat}'.format(
            name=F.name, cat=F.source))
    if grid is not None:
        _ensure_covered(D, grid)

    e = F.counit_i0() @ F.mor(D.e) @ F.r_at(D.left, D.right)
    n = F.i_at(D.right, D.left) @ F.mor(D.n) @ F.unit_r0()
    logger.debug('Transported %s through %s', D.name, F.name)

    return DualSituation(F.obj(D.left), F.obj(D.right), e, n, name='{f}({d})'.format(f=F.name, d=D.name))


class FrobeniusAlgebra:
    """A candidate Frobenius algebra ``(R, μ, η, δ, ε)`` in ``Mat(Q)``, the axioms are checked separately."""

    FIELDS = ('mu', 'eta', 'delta', 'eps')
    """:py:class:`tuple`: the structure maps."""

    def __init__(self, obj: Mat, mu: RatMatrix, eta: RatMatrix, delta: RatMatrix, eps: RatMatrix, name: str = 'R'):
        """Constructor.

        Raises:
            frobcheck.ShapeError: if the shapes do not match the object.

        """
        dim = obj.dim
        self.obj = obj
        self.name = name
        self.mu = _expect('mu', mu, (dim, dim * dim), 'Multiplication')
        self.eta = _expect('eta', eta, (dim, 1), 'Unit')
        self.delta = _expect('delta', delta, (dim * dim, dim), 'Comultiplication')
        self.eps = _expect('eps', eps, (1, dim), 'Counit')

    def __repr__(self) -> str:
        """Representation with the object."""
        return '<FrobeniusAlgebra {name} on {obj}>'.format(name=self.name, obj=self.obj)

    @property
    def dim(self) -> int:
        """Dimension of the underlying object."""
        return self.obj.dim

    def override(self, field: str, matrix: RatMatrix) -> 'FrobeniusAlgebra':
        """Return a copy with one of the structure maps replaced."""
        if field not in self.FIELDS:
            raise FrobcheckError("Unknown Frobenius algebra field '{field}', expected one of {fields}".format(
                field=field, fields=', '.join(self.FIELDS)))
        values = {name: getattr(self, name) for name in self.FIELDS}
        values[field] = matrix
        return FrobeniusAlgebra(self.obj, name=self.name, **values)


def check_frobenius_algebra(R: FrobeniusAlgebra) -> Report:
    """Verify the eight equations of a Frobenius algebra, one entry each.

    Associativity, the two unit laws, coassociativity, the two counit laws and the two Frobenius laws
    ``(μ⊗1)(1⊗δ) = δμ = (1⊗μ)(δ⊗1)``.
    """
    report = Report()
    one = linalg.identity(R.dim)
    location = format_location(R.name)
    equations = (
        ('associativity', lambda: R.mu @ linalg.kron(R.mu, one), lambda: R.mu @ linalg.kron(one, R.mu)),
        ('left unit', lambda: R.mu @ linalg.kron(R.eta, one), lambda: one),
        ('right unit', lambda: R.mu @ linalg.kron(one, R.eta), lambda: one),
        ('coassociativity', lambda: linalg.kron(R.delta, one) @ R.delta, lambda: linalg.kron(one, R.delta) @ R.delta),
        ('left counit', lambda: linalg.kron(R.eps, one) @ R.delta, lambda: one),
        ('right counit', lambda: linalg.kron(one, R.eps) @ R.delta, lambda: one),
        ('left frobenius', lambda: linalg.kron(R.mu, one) @ linalg.kron(one, R.delta), lambda: R.delta @ R.mu),
        ('right frobenius', lambda: linalg.kron(one, R.mu) @ linalg.kron(R.delta, one), lambda: R.delta @ R.mu),
    )
    for check, lhs, rhs in equations:
        report.check('frobalg', check, location, lhs, rhs)

    return report


def _accept_fixture(report: Report, name: str) -> None:
    """Raise FixtureError unless the fixture passed its own axiom checker."""
    if not report.passed:
        first = next(entry for entry in report.entries if entry.status != 'pass')
        raise FixtureError('Fixture {name} rejected: {suite} {check} {status} at {location}'.format(
            name=name, suite=first.suite, check=first.check, status=first.status, location=first.location))
    logger.trace('Fixture %s accepted after %d checks', name, len(report.entries))


def group_algebra(base: FiniteBase) -> FrobeniusAlgebra:
    """The group algebra ``Q[G]`` with ``ε`` the coefficient of the identity and ``δ(g) = Σ_h h⊗h⁻¹g``.

    The basis follows the order of the group labels.

    Raises:
        frobcheck.FixtureError: if the generated algebra fails its axioms.

    """
    order = base.order
    mu, delta = {}, {}
    for g in base.labels:
        for h in base.labels:
            mu[(base.index(base.mul(g, h)), base.index(g) * order + base.index(h))] = 1
            delta[(base.index(h) * order + base.index(base.mul(base.inverse(h), g)), base.index(g))] = 1

    identity = base.index(base.identity)
    algebra = FrobeniusAlgebra(
        Mat(order), RatMatrix(mu, (order, order * order)), RatMatrix({(identity, 0): 1}, (order, 1)),
        RatMatrix(delta, (order * order, order)), RatMatrix({(0, identity): 1}, (1, order)),
        name='Q[{name}]'.format(name=base.name))
    _accept_fixture(check_frobenius_algebra(algebra), algebra.name)
    return algebra


def zmod_algebra(n: int) -> FrobeniusAlgebra:
    """The group algebra of the cyclic group of order ``n``."""
    return group_algebra(cyclic_base(n))


def unit_algebra() -> FrobeniusAlgebra:
    """The trivial Frobenius algebra on the unit object, every structure map is ``[[1]]``."""
    one = linalg.identity(1)
    algebra = FrobeniusAlgebra(Mat(1), one, one, one, one, name='unit')
    _accept_fixture(check_frobenius_algebra(algebra), algebra.name)
    return algebra


def apply_functor_to_algebra(F: FrobFunctorData, R: FrobeniusAlgebra,
                             grid: Optional[ObjectGrid] = None) -> FrobeniusAlgebra:
    """Image of a Frobenius algebra: ``(FR, F(μ)∘r_{R,R}, F(η)∘r0, i_{R,R}∘F(δ), i0∘F(ε))``.

    Raises:
        frobcheck.CoverageError: if a grid is given and it does not contain ``R`` and ``R⊗R``.

    """
    if grid is not None:
        missing = sorted({obj for obj in (R.obj, MATQ.tensor_obj(R.obj, R.obj)) if obj not in grid})
        if missing:
            raise CoverageError('Grid {grid} misses the objects {missing} of {name}'.format(
                grid=grid, missing=format_location(*missing), name=R.name))

    return FrobeniusAlgebra(
        F.obj(R.obj), F.mor(R.mu) @ F.r_at(R.obj, R.obj), F.mor(R.eta) @ F.unit_r0(),
        F.i_at(R.obj, R.obj) @ F.mor(R.delta), F.counit_i0() @ F.mor(R.eps),
        name='{f}({r})'.format(f=F.name, r=R.name))


def tensor_left_functor(R: FrobeniusAlgebra, cat: CategoryInstance = MATQ) -> FrobFunctorData:
    """The functor ``R⊗-`` with the structure induced by the Frobenius algebra ``R`` and the braiding.

    * ``r_{A,B} = (μ⊗1⊗1)∘(1⊗c_{A,R}⊗1)`` and ``r0 = η``
    * ``i_{A,B} = (1⊗c_{R,A}⊗1)∘(δ⊗1⊗1)`` and ``i0 = ε``

    Raises:
        frobcheck.UnsupportedStructureError: if the category is not braided.

    """
    if not cat.braided:
        raise UnsupportedStructureError('Unable to build {name}⊗- on {cat}: it has no braiding'.format(
            name=R.name, cat=cat))

    one_r = linalg.identity(R.dim)

    def r_component(a, b):
        swap = linalg.kron_all(one_r, cat.braid(a, R.obj), linalg.identity(b.dim))
        return linalg.kron_all(R.mu, linalg.identity(a.dim), linalg.identity(b.dim)) @ swap

    def i_component(a, b):
        swap = linalg.kron_all(one_r, cat.braid(R.obj, a), linalg.identity(b.dim))
        return swap @ linalg.kron_all(R.delta, linalg.identity(a.dim), linalg.identity(b.dim))

    return FrobFunctorData('{name}⊗-'.format(name=R.name), cat, lambda obj: Mat(R.dim * obj.dim),
                           lambda f: linalg.kron(one_r, f), r=r_component, r0=R.eta, i=i_component, i0=R.eps,
                           kind='tensor_left')


class MonComonNatTransf:
    """A candidate monoidal and comonoidal natural transformation ``α: F -> G`` given by its components."""

    def __init__(self, source: FrobFunctorData, target: FrobFunctorData, components, name: str = 'α'):
        """Constructor.

        Arguments:
            source (frobcheck.functor.FrobFunctorData): the functor ``F``.
            target (frobcheck.functor.FrobFunctorData): the functor ``G``.
            components (mixed): the ``α_A: FA -> GA`` components keyed by ``(A,)``, see
                :py:func:`frobcheck.functor.as_table`.
            name (str, optional): the name used in reports.

        Raises:
            frobcheck.ShapeError: if the functors have different sources.

        """
        if source.source != target.source:
            raise ShapeError('Functors {f} and {g} have different sources'.format(f=source.name, g=target.name))

        self.source = source
        self.target = target
        self.components: ComponentTable = as_table(components)  # type: ignore
        self.name = name

    def __repr__(self) -> str:
        """Representation with the functors."""
        return '<MonComonNatTransf {name}: {f} -> {g}>'.format(name=self.name, f=self.source.name, g=self.target.name)

    def at(self, obj: MonObject) -> RatMatrix:
        """The component at an object."""
        return self.components.get((obj,))

    def override(self, obj: MonObject, matrix: RatMatrix) -> 'MonComonNatTransf':
        """Return a copy with the component at ``obj`` replaced."""
        return MonComonNatTransf(self.source, self.target, self.components.override((obj,), matrix), name=self.name)


def identity_transformation(F: FrobFunctorData, G: FrobFunctorData) -> MonComonNatTransf:
    """The transformation with identity components, ``F`` and ``G`` must agree on objects."""
    def component(obj):
        if F.dim(obj) != G.dim(obj):
            raise ShapeError('Functors {f} and {g} differ at {obj}: {fdim} != {gdim}'.format(
                f=F.name, g=G.name, obj=obj, fdim=F.dim(obj), gdim=G.dim(obj)))
        return linalg.identity(F.dim(obj))

    return MonComonNatTransf(F, G, component, name='id')


def scaled_transformation(F: FrobFunctorData, G: FrobFunctorData, factor) -> MonComonNatTransf:
    """The transformation with components ``factor·id``."""
    identity = identity_transformation(F, G)
    return MonComonNatTransf(F, G, lambda obj: identity.at(obj).scale(factor),
                             name='{q}·id'.format(q=linalg.format_rational(factor)))


def check_nat_transf(t: MonComonNatTransf, grid: ObjectGrid) -> Report:
    """Verify that ``α`` is natural, monoidal and comonoidal on the grid.

    * ``α_{A'}∘F(f) = G(f)∘α_A`` for the spanning morphisms ``f: A -> A'``
    * ``α_{A⊗B}∘r^F = r^G∘(α_A⊗α_B)`` and ``α_I∘r0^F = r0^G``
    * ``i0^G∘α_I = i0^F`` and ``(α_A⊗α_B)∘i^F = i^G∘α_{A⊗B}``
    """
    F, G, cat = t.source, t.target, t.source.source
    report = Report()
    for a, a2 in grid.tuples(2):
        for f in cat.spanning_morphisms(a, a2):
            report.check('nattrans', 'naturality', format_location(a, a2, describe_morphism(f)),
                         lambda a2=a2, f=f: t.at(a2) @ F.mor(f), lambda a=a, f=f: G.mor(f) @ t.at(a))

    for a, b in grid.tuples(2):
        ab = cat.tensor_obj(a, b)
        location = format_location(a, b)
        report.check('nattrans', 'monoidal', location, lambda a=a, b=b, ab=ab: t.at(ab) @ F.r_at(a, b),
                     lambda a=a, b=b: G.r_at(a, b) @ linalg.kron(t.at(a), t.at(b)))
        report.check('nattrans', 'comonoidal', location, lambda a=a, b=b: linalg.kron(t.at(a), t.at(b)) @ F.i_at(a, b),
                     lambda a=a, b=b, ab=ab: G.i_at(a, b) @ t.at(ab))

    unit = cat.unit()
    report.check('nattrans', 'unit', format_location(unit), lambda: t.at(unit) @ F.unit_r0(), G.unit_r0)
    report.check('nattrans', 'counit', format_location(unit), lambda: G.counit_i0() @ t.at(unit), F.counit_i0)
    report.add_note('Transformations are verified on the objects of the grid only.')

    return report


def mate_inverse(t: MonComonNatTransf, D: DualSituation, mirrored: bool = False) -> RatMatrix:
    """The mate of a monoidal and comonoidal transformation, the candidate inverse of one of its components.

    With ``D = (A, B, e, n)`` it returns ``β_A = (e_G⊗1_{FA})∘(1_{GA}⊗α_B⊗1_{FA})∘(1_{GA}⊗n_F): GA -> FA``, where
    ``n_F`` and ``e_G`` come from the dual situations transported through ``F`` and ``G``. With ``mirrored`` the
    situation is read as ``(B, A, e, n)`` and the result is
    ``β_B = (1_{FB}⊗e_G)∘(1_{FB}⊗α_A⊗1_{GB})∘(n_F⊗1_{GB}): GB -> FB``.
    """
    F, G = t.source, t.target
    dual_f, dual_g = transport_dual(F, D), transport_dual(G, D)
    fa, fb, ga, gb = (linalg.identity(dim) for dim in (F.dim(D.left), F.dim(D.right), G.dim(D.left),
                                                      G.dim(D.right)))
    if mirrored:
        return (linalg.kron(fb, dual_g.e) @ linalg.kron_all(fb, t.at(D.left), gb) @ linalg.kron(dual_f.n, gb))

    return (linalg.kron(dual_g.e, fa) @ linalg.kron_all(ga, t.at(D.right), fa) @ linalg.kron(ga, dual_f.n))


def check_mate_invertibility(t: MonComonNatTransf, D: DualSituation, grid: ObjectGrid,
                             mirrored: bool = False) -> Report:
    """Verify that the mate of ``α`` is a two-sided inverse of its component.

    The transformation is checked first with :py:func:`check_nat_transf` and the mate is not trusted unless it passes.
    """
    report = check_nat_transf(t, grid)
    obj = D.right if mirrored else D.left
    location = format_location(D.name, obj, 'mirrored' if mirrored else 'direct')
    if not report.passed:
        report.add_error('mate', 'precondition', location,
                         'Transformation {name} is not monoidal and comonoidal, its mate is not trusted'.format(
                             name=t.name))
        return report

    try:
        _ensure_covered(D, grid, tensors=False)
        beta = mate_inverse(t, D, mirrored=mirrored)
    except FrobcheckError as e:
        report.add_error('mate', 'inverse', location, str(e))
        return report

    report.check('mate', 'β∘α', location, lambda: beta @ t.at(obj), lambda: linalg.identity(t.source.dim(obj)))
    report.check('mate', 'α∘β', location, lambda: t.at(obj) @ beta, lambda: linalg.identity(t.target.dim(obj)))
    return report
