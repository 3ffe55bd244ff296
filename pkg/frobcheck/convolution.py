"""Convolution monoidal structure on representations of a finite abelian group.

A functor ``Σ G -> Mat(Q)`` is a representation ``ρ`` of ``G``. A coend over ``Σ G`` of a functor of ``k`` variables
``T`` with hom label ``Σ G(*⊗...⊗*, *) = G`` is the quotient of the ambient space ``Q[G]⊗T`` by the relations
``x∘(g1⊗...⊗gk) ⊗ t ~ x ⊗ T(g1, ..., gk) t``. Every quotient is computed as an exact cokernel with a chosen section, so
induced maps are concrete matrices.
"""
import itertools
import logging

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from frobcheck import FrobcheckError, ShapeError
from frobcheck import linalg
from frobcheck.duality import group_algebra
from frobcheck.functor import check_all, FrobFunctorData, ObjectGrid
from frobcheck.linalg import format_shape, RatMatrix
from frobcheck.monoidal import FiniteBase, Mat, SigmaG, STAR
from frobcheck.report import format_location, Report, Witness


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""
FLAT_FAILS = '(♭) fails'
""":py:class:`str`: the diagnosis recorded when the canonical evaluation of the 3-variable coend is not invertible."""
STRUCTURE_FIELDS = ('r', 'r0', 'i', 'i0')
""":py:class:`tuple`: the optional structure maps of a representation."""


class WellDefinednessError(FrobcheckError):
    """Raised when an ambient map does not send coend relations to relations."""

    def __init__(self, message: str, defect: RatMatrix, relation: Tuple):
        """Constructor.

        Arguments:
            message (str): the error message.
            defect (frobcheck.linalg.RatMatrix): the non-zero matrix ``projection·ambient·relations``.
            relation (tuple): the ``(group elements, hom label, basis index)`` of the first offending relation.

        """
        super().__init__(message)
        self.defect = defect
        self.relation = relation


class BaseFunctor:
    """A representation of a finite abelian group with optional Frobenius monoidal structure maps."""

    def __init__(self, base: FiniteBase, dim: int, rho: Dict[str, RatMatrix], r: Optional[RatMatrix] = None,
                 r0: Optional[RatMatrix] = None, i: Optional[RatMatrix] = None, i0: Optional[RatMatrix] = None,
                 name: str = 'F', validate: bool = True):
        """Constructor.

        Arguments:
            base (frobcheck.monoidal.FiniteBase): the group.
            dim (int): the dimension of the representation.
            rho (dict): the ``{label: matrix}`` action.
            r (frobcheck.linalg.RatMatrix, optional): the multiplication ``V⊗V -> V``.
            r0 (frobcheck.linalg.RatMatrix, optional): the unit ``I -> V``.
            i (frobcheck.linalg.RatMatrix, optional): the comultiplication ``V -> V⊗V``.
            i0 (frobcheck.linalg.RatMatrix, optional): the counit ``V -> I``.
            name (str, optional): the name used in reports.
            validate (bool, optional): whether to reject an action that is not a homomorphism, disable only to build
                negative controls.

        Raises:
            frobcheck.ShapeError: if a matrix has the wrong shape or an element has no action.
            frobcheck.FrobcheckError: if ``validate`` is set and ``rho`` is not a group homomorphism.

        """
        self.base = base
        self.dim = dim
        self.name = name
        self.rho = dict(rho)
        self.r, self.r0, self.i, self.i0 = r, r0, i, i0

        for g in base.labels:
            if g not in self.rho:
                raise ShapeError("Representation {name} has no action for '{g}'".format(name=name, g=g))
            if self.rho[g].shape != (dim, dim):
                raise ShapeError("Action of '{g}' in {name} must be {dim}x{dim}, got {shape}".format(
                    g=g, name=name, dim=dim, shape=format_shape(self.rho[g])))

        shapes = {'r': (dim, dim * dim), 'r0': (dim, 1), 'i': (dim * dim, dim), 'i0': (1, dim)}
        for field in STRUCTURE_FIELDS:
            matrix = getattr(self, field)
            if matrix is not None and matrix.shape != shapes[field]:
                raise ShapeError('Structure map {field} of {name} must be {rows}x{cols}, got {shape}'.format(
                    field=field, name=name, rows=shapes[field][0], cols=shapes[field][1], shape=format_shape(matrix)))

        if validate:
            self._validate_homomorphism()

    def _validate_homomorphism(self) -> None:
        """Check ``rho(e) = id`` and ``rho(g)rho(h) = rho(gh)`` on all pairs."""
        if self.rho[self.base.identity] != linalg.identity(self.dim):
            raise FrobcheckError('Action of the identity in {name} is not the identity matrix'.format(name=self.name))
        for g, h in itertools.product(self.base.labels, repeat=2):
            if self.rho[g] @ self.rho[h] != self.rho[self.base.mul(g, h)]:
                raise FrobcheckError("Representation {name} is not a homomorphism at ('{g}', '{h}')".format(
                    name=self.name, g=g, h=h))

    def __repr__(self) -> str:
        """Representation with the group and the dimension."""
        return '<BaseFunctor {name} of {base} on Q^{dim}>'.format(name=self.name, base=self.base.name, dim=self.dim)

    def act(self, g: str) -> RatMatrix:
        """The action of a group element."""
        return self.rho[g]

    def override(self, field: str, matrix: RatMatrix, element: Optional[str] = None) -> 'BaseFunctor':
        """Return a copy with a structure map, or the action of ``element`` when ``field`` is ``rho``, replaced.

        Replacing the action disables the homomorphism validation, the result is a negative control.
        """
        values = {name: getattr(self, name) for name in STRUCTURE_FIELDS}
        rho = dict(self.rho)
        validate = True
        if field == 'rho':
            if element is None:
                raise FrobcheckError('Overriding rho requires a group element')
            self.base.index(element)
            rho[element] = matrix
            validate = False
        elif field in STRUCTURE_FIELDS:
            values[field] = matrix
        else:
            raise FrobcheckError("Unknown representation field '{field}', expected one of rho, {fields}".format(
                field=field, fields=', '.join(STRUCTURE_FIELDS)))

        return BaseFunctor(self.base, self.dim, rho, name=self.name, validate=validate, **values)

    def as_functor(self) -> FrobFunctorData:
        """The functor data on ``Σ G`` of kind ``group_rep``, so that every functor check applies."""
        key = (STAR, STAR)
        return FrobFunctorData(self.name, SigmaG(self.base), lambda obj: Mat(self.dim), self.act,
                               r={key: self.r} if self.r is not None else {}, r0=self.r0,
                               i={key: self.i} if self.i is not None else None, i0=self.i0, kind='group_rep')


def regular_representation(base: FiniteBase) -> Dict[str, RatMatrix]:
    """The regular action ``ρ(g) e_x = e_{gx}`` on ``Q[G]``."""
    order = base.order
    return {g: RatMatrix({(base.index(base.mul(g, x)), base.index(x)): 1 for x in base.labels}, (order, order))
            for g in base.labels}


def convolution_unit(base: FiniteBase) -> BaseFunctor:
    """The unit ``J`` of the convolution product: the regular representation, with no structure maps."""
    return BaseFunctor(base, base.order, regular_representation(base), name='J')


def regular_functor(base: FiniteBase) -> BaseFunctor:
    """The regular representation with the structure maps of the group algebra.

    Raises:
        frobcheck.FixtureError: if the group algebra fails its axioms.

    """
    algebra = group_algebra(base)
    return BaseFunctor(base, base.order, regular_representation(base), r=algebra.mu, r0=algebra.eta, i=algebra.delta,
                       i0=algebra.eps, name='regular({name})'.format(name=base.name))


def right_translation(base: FiniteBase, y: str) -> RatMatrix:
    """The permutation ``L_y: e_x -> e_{xy}`` of the hom label."""
    order = base.order
    return RatMatrix({(base.index(base.mul(x, y)), base.index(x)): 1 for x in base.labels}, (order, order))


@dataclass(frozen=True)
class CoendShape:
    """A functor of ``arity`` variables on ``Σ G``: its dimension and its action on tuples of group elements."""

    name: str
    arity: int
    dim: int
    action: Callable[[Sequence[str]], RatMatrix]


@dataclass(frozen=True)
class CoendSpace:
    """The quotient of ``Q[G]⊗T`` by the coend relations, with a chosen section."""

    base: FiniteBase
    shape_name: str
    ambient_dim: int
    projection: RatMatrix
    section: RatMatrix
    relations: RatMatrix
    tuples: Tuple[Tuple[str, ...], ...]
    index: Tuple[Tuple[str, int], ...]
    action: Dict[str, RatMatrix]

    @property
    def dimension(self) -> int:
        """Dimension of the quotient."""
        return self.projection.rows

    def describe_relation(self, column: int) -> Tuple[Tuple[str, ...], str, int]:
        """The ``(group elements, hom label, basis index)`` that generate a relation column."""
        block, position = divmod(column, self.ambient_dim)
        label, basis = self.index[position]
        return self.tuples[block], label, basis


def coend(base: FiniteBase, shape: CoendShape) -> CoendSpace:
    """Build the coend of a functor of several variables on ``Σ G``.

    The ambient basis is ``e_x⊗t`` at index ``index(x)·dim + t``. One relation block per tuple ``(g1, ..., gk)`` is
    ``(L_{g1...gk}⊗1) - (1⊗T(g1, ..., gk))`` and the quotient is the cokernel of the blocks side by side. The induced
    action of ``y`` on the quotient is the postcomposition ``e_x⊗t -> e_{yx}⊗t``.

    Arguments:
        base (frobcheck.monoidal.FiniteBase): the group.
        shape (frobcheck.convolution.CoendShape): the functor of ``arity`` variables.

    Returns:
        frobcheck.convolution.CoendSpace: the quotient.

    """
    order = base.order
    ambient_dim = order * shape.dim
    one_t = linalg.identity(shape.dim)
    one_g = linalg.identity(order)
    tuples = tuple(itertools.product(base.labels, repeat=shape.arity))

    blocks = [linalg.kron(right_translation(base, base.prod(elements)), one_t)
              - linalg.kron(one_g, shape.action(elements)) for elements in tuples]
    relations = linalg.hstack(*blocks) if blocks else linalg.zeros(ambient_dim, 0)
    projection, section = linalg.cokernel(relations)

    action = {y: projection @ linalg.kron(right_translation(base, y), one_t) @ section for y in base.labels}
    index = tuple((x, t) for x in base.labels for t in range(shape.dim))
    logger.debug('Coend of %s over %s: ambient %d, %d relation blocks, quotient %d', shape.name, base.name,
                 ambient_dim, len(tuples), projection.rows)

    return CoendSpace(base, shape.name, ambient_dim, projection, section, relations, tuples, index, action)


def induced_map(src: CoendSpace, dst: CoendSpace, ambient_map: RatMatrix) -> RatMatrix:
    """The map between quotients induced by a map between ambient spaces: ``dst.projection·ambient·src.section``.

    Raises:
        frobcheck.ShapeError: if the ambient map has the wrong shape.
        frobcheck.convolution.WellDefinednessError: if the ambient map does not send relations to relations, with the
            first offending relation.

    """
    if ambient_map.shape != (dst.ambient_dim, src.ambient_dim):
        raise ShapeError('Ambient map must be {rows}x{cols}, got {shape}'.format(
            rows=dst.ambient_dim, cols=src.ambient_dim, shape=format_shape(ambient_map)))

    defect = dst.projection @ ambient_map @ src.relations
    if not defect.is_zero():
        column = min(col for (_, col), _ in defect.items())
        relation = src.describe_relation(column)
        raise WellDefinednessError(
            'Map {src} -> {dst} is not well defined: relation {elements} at hom label {label}, basis {basis} is not '
            'sent to a relation'.format(src=src.shape_name, dst=dst.shape_name, elements=format_location(*relation[0]),
                                        label=relation[1], basis=relation[2]), defect, relation)

    return dst.projection @ ambient_map @ src.section


def _shape(F: BaseFunctor, name: str, arity: int, dim: int, action: Callable[[Sequence[str]], RatMatrix]) -> CoendShape:
    """Shortcut to build a shape of the given representation."""
    return CoendShape('{shape} of {name}'.format(shape=name, name=F.name), arity, dim, action)


def convolution_product(F: BaseFunctor, G: BaseFunctor) -> CoendSpace:
    """The convolution ``F*G``: the coend of ``T(g, h) = ρ_F(g)⊗ρ_G(h)`` on ``V⊗W``.

    Raises:
        frobcheck.ShapeError: if the representations are over different groups.

    """
    if F.base != G.base:
        raise ShapeError('Unable to convolve {f} on {fb} with {g} on {gb}'.format(
            f=F.name, fb=F.base.name, g=G.name, gb=G.base.name))

    return coend(F.base, CoendShape('{f}*{g}'.format(f=F.name, g=G.name), 2, F.dim * G.dim,
                                    lambda elements: linalg.kron(F.act(elements[0]), G.act(elements[1]))))


def _evaluation(F: BaseFunctor) -> RatMatrix:
    """The ambient evaluation ``e_x⊗v -> ρ(x)v``."""
    return linalg.hstack(*(F.act(x) for x in F.base.labels))


def _canonical_eval(F: BaseFunctor, arity: int) -> Tuple[CoendSpace, RatMatrix, bool]:
    """Coend of ``F(A1⊗...⊗Ak)`` with its evaluation map and whether it is an isomorphism."""
    space = coend(F.base, _shape(F, 'F({arity} variables)'.format(arity=arity), arity, F.dim,
                                 lambda elements: F.act(F.base.prod(elements))))
    evaluation = _evaluation(F)
    well_defined = (evaluation @ space.relations).is_zero()
    if not well_defined:
        logger.info('Evaluation of the %d-variable coend of %s does not annihilate the relations', arity, F.name)
    mapping = evaluation @ space.section
    return space, mapping, well_defined and linalg.is_iso(mapping)


def canonical_eval3(F: BaseFunctor) -> Tuple[RatMatrix, bool]:
    """The canonical evaluation ``[x⊗v] -> ρ(x)v`` of the 3-variable coend of ``F(A⊗B⊗C)``.

    Returns:
        tuple: the ``(map, iso)`` pair, ``iso`` tells whether the map is a well defined isomorphism.

    """
    _, mapping, iso = _canonical_eval(F, 3)
    return mapping, iso


def canonical_eval2(F: BaseFunctor) -> Tuple[RatMatrix, bool]:
    """The canonical evaluation of the 2-variable coend of ``F(A⊗B)``, see :py:func:`canonical_eval3`."""
    _, mapping, iso = _canonical_eval(F, 2)
    return mapping, iso


def canonical_eval2_retraction(F: BaseFunctor) -> Report:
    """Derive the 2-variable evaluation isomorphism from the 3-variable one.

    With ``h`` the map from the 3-variable to the 2-variable coend induced by the ambient identity, ``k`` the one in
    the other direction obtained setting ``C = I`` and ``l = eval3⁻¹∘eval2``, verify ``hk = 1``, ``l∘copr = copr``,
    ``lh = 1``, ``hl = 1`` and that the 2-variable evaluation is an isomorphism.
    """
    report = Report()
    location = format_location(F.name, F.base.name)
    space3, eval3, iso3 = _canonical_eval(F, 3)
    if not iso3:
        report.add_error('convolution', 'eval3', location,
                         '{diagnosis}: canonical evaluation of the 3-variable coend is not invertible, '
                         '{shape} matrix of rank {rank}'.format(diagnosis=FLAT_FAILS, shape=format_shape(eval3),
                                                                rank=linalg.rank(eval3)))
        return report
    report.add_pass('convolution', 'eval3 iso', location)

    space2, eval2, iso2 = _canonical_eval(F, 2)
    ambient = linalg.identity(space3.ambient_dim)
    try:
        h = induced_map(space3, space2, ambient)
        k = induced_map(space2, space3, ambient)
    except WellDefinednessError as e:
        report.add_error('convolution', 'retraction', location, str(e))
        return report

    l_map = linalg.inverse(eval3) @ eval2
    report.check('convolution', 'hk = 1', location, lambda: h @ k, lambda: linalg.identity(space2.dimension))
    report.check('convolution', 'l∘copr = copr', location, lambda: l_map @ space2.projection,
                 lambda: space3.projection)
    report.check('convolution', 'lh = 1', location, lambda: l_map @ h, lambda: linalg.identity(space3.dimension))
    report.check('convolution', 'hl = 1', location, lambda: h @ l_map, lambda: linalg.identity(space2.dimension))
    if iso2:
        report.add_pass('convolution', 'eval2 iso', location)
    else:
        report.add_error('convolution', 'eval2 iso', location, 'Canonical evaluation of the 2-variable coend is not '
                         'invertible although the 3-variable one is')

    return report


def _induced_square(report: Report, check: str, location: str, spaces: Dict[str, CoendSpace],
                    path1: List[Tuple[str, str, RatMatrix]], path2: List[Tuple[str, str, RatMatrix]]) -> None:
    """Compare the composites of two paths of induced maps between coends, well-definedness failures included."""
    composites = []
    for path in (path1, path2):
        composite: Optional[RatMatrix] = None
        for src, dst, ambient in path:
            try:
                step = induced_map(spaces[src], spaces[dst], ambient)
            except WellDefinednessError as e:
                zero = linalg.zeros(*e.defect.shape)
                report.add_fail('convolution', '{check} well-definedness'.format(check=check),
                                format_location(src, dst, *e.relation[0]),
                                Witness(e.defect, zero, *min(key for key, _ in e.defect.items())),
                                message='equivariance bug: {message}'.format(message=e))
                return
            composite = step if composite is None else step @ composite
        composites.append(composite)

    report.compare('convolution', check, location, composites[0], composites[1])


def induced_frobenius_check(F: BaseFunctor) -> Report:
    """Verify that the Frobenius structure of ``F`` induces commuting squares of maps between coends.

    The preconditions on the ``Σ G`` functor are reported first. Then the four 3-variable coends of ``F(AB)⊗FC``,
    ``FA⊗FB⊗FC``, ``F(ABC)`` and ``FA⊗F(BC)`` are materialized and both Frobenius squares of induced maps are
    compared. Finally the convolution ``F*F`` is shown isomorphic to the two 3-variable coends with two tensor factors.
    Well-definedness failures are reported as equivariance bugs with the offending relation.
    """
    report = check_all(F.as_functor(), ObjectGrid.for_category(SigmaG(F.base)))
    location = format_location(F.name, F.base.name)
    missing = [field for field in STRUCTURE_FIELDS if getattr(F, field) is None]
    if missing:
        report.add_error('convolution', 'structure', location, 'Representation {name} has no {fields}'.format(
            name=F.name, fields=', '.join(missing)))
        return report

    d, base = F.dim, F.base
    one, one_g = linalg.identity(d), linalg.identity(base.order)
    act, prod = F.act, base.prod
    shapes = {
        'F(AB)⊗FC': _shape(F, 'F(AB)⊗FC', 3, d * d, lambda g: linalg.kron(act(prod(g[:2])), act(g[2]))),
        'FA⊗FB⊗FC': _shape(F, 'FA⊗FB⊗FC', 3, d ** 3, lambda g: linalg.kron_all(act(g[0]), act(g[1]), act(g[2]))),
        'F(ABC)': _shape(F, 'F(ABC)', 3, d, lambda g: act(prod(g))),
        'FA⊗F(BC)': _shape(F, 'FA⊗F(BC)', 3, d * d, lambda g: linalg.kron(act(g[0]), act(prod(g[1:])))),
    }
    spaces = {name: coend(base, shape) for name, shape in shapes.items()}
    for name, space in spaces.items():
        logger.debug('Coend %s of %s has dimension %d', name, F.name, space.dimension)

    def lift(matrix: RatMatrix) -> RatMatrix:
        return linalg.kron(one_g, matrix)

    r, i = F.r, F.i
    assert r is not None and i is not None
    _induced_square(report, 'left square', location, spaces,
                    [('F(AB)⊗FC', 'FA⊗FB⊗FC', lift(linalg.kron(i, one))),
                     ('FA⊗FB⊗FC', 'FA⊗F(BC)', lift(linalg.kron(one, r)))],
                    [('F(AB)⊗FC', 'F(ABC)', lift(r)),
                     ('F(ABC)', 'FA⊗F(BC)', lift(i))])
    _induced_square(report, 'right square', location, spaces,
                    [('FA⊗F(BC)', 'FA⊗FB⊗FC', lift(linalg.kron(one, i))),
                     ('FA⊗FB⊗FC', 'F(AB)⊗FC', lift(linalg.kron(r, one)))],
                    [('FA⊗F(BC)', 'F(ABC)', lift(r)),
                     ('F(ABC)', 'F(AB)⊗FC', lift(i))])

    product = convolution_product(F, F)
    ambient = linalg.identity(product.ambient_dim)
    for name in ('F(AB)⊗FC', 'FA⊗F(BC)'):
        chain_location = format_location(F.name, 'F*F', name)
        try:
            forward = induced_map(product, spaces[name], ambient)
            backward = induced_map(spaces[name], product, ambient)
        except WellDefinednessError as e:
            report.add_error('convolution', 'chain', chain_location, str(e))
            continue
        report.check('convolution', 'chain backward∘forward', chain_location, lambda: backward @ forward,
                     lambda: linalg.identity(product.dimension))
        report.check('convolution', 'chain forward∘backward', chain_location,
                     lambda name=name: forward @ backward, lambda name=name: linalg.identity(spaces[name].dimension))

    return report


def quotient_dimension(space: CoendSpace) -> int:
    """Dimension of a coend, ``ambient - rank(relations)``."""
    return space.ambient_dim - linalg.rank(space.relations)


def run_convolution_suite(F: BaseFunctor) -> Report:
    """Every convolution check of a representation: the retraction of the canonical evaluations, the induced
    Frobenius squares, and the dimension of ``F*F`` against the rank of its relations."""
    report = Report()
    location = format_location(F.name, F.base.name)
    report.extend(canonical_eval2_retraction(F))
    report.extend(induced_frobenius_check(F))
    product = convolution_product(F, F)
    report.compare('convolution', 'F*F dimension', location, linalg.scalar(product.dimension),
                   linalg.scalar(quotient_dimension(product)))
    return report
