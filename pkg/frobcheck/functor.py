"""Frobenius monoidal functors into Mat(Q): structure data, built-in generators and exhaustive grid checks.

A functor is given by its object and morphism maps plus the component tables of the monoidal structure ``(r, r0)`` and
of the comonoidal structure ``(i, i0)``. Every check evaluates both sides of each equation with exact arithmetic on an
:py:class:`ObjectGrid` and records the outcome in a :py:class:`frobcheck.report.Report`.
"""
import copy
import itertools
import logging

from typing import Callable, Dict, Iterator, List, Optional, Tuple

from ClusterShell.RangeSet import RangeSet, RangeSetParseError

from frobcheck import CoverageError, DimensionLimitError, FrobcheckError, ShapeError, UnsupportedStructureError
from frobcheck import linalg
from frobcheck.linalg import format_shape, RatMatrix
from frobcheck.monoidal import CategoryInstance, Mat, MATQ, MatQ, MonObject, SigmaG, STAR
from frobcheck.report import format_location, Report


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""
DEFAULT_GRID_DIMS = '1-2'
""":py:class:`str`: the object dimensions checked when no grid is given."""
GRID_NOTE = 'Equations are verified on the objects of the grid only, completeness beyond the grid is not claimed.'
""":py:class:`str`: the note attached to every grid-based report."""
KINDS = ('identity', 'tensor_left', 'composite', 'pointwise_tensor', 'group_rep', 'strong', 'unit', 'scaled', 'custom')
""":py:class:`tuple`: the kinds of functor data."""


class StrongFunctorError(FrobcheckError):
    """Raised when a functor cannot be promoted from strong monoidal to Frobenius monoidal."""


Key = Tuple[MonObject, ...]


class ComponentTable:
    """Table of morphism components keyed by tuples of objects.

    Entries are either explicit or produced on demand by a generator and memoized. Explicit entries always win, so a
    generated table can be overridden one key at a time.
    """

    def __init__(self, entries: Optional[Dict[Key, RatMatrix]] = None,
                 generator: Optional[Callable[..., RatMatrix]] = None):
        """Table constructor.

        Arguments:
            entries (dict, optional): explicit ``{key: matrix}`` components.
            generator (callable, optional): called with the objects of a key to produce the missing components.

        """
        self._entries = dict(entries or {})
        self._generator = generator
        self._cache: Dict[Key, RatMatrix] = {}

    def get(self, key: Key) -> RatMatrix:
        """Return the component at the given key.

        Raises:
            frobcheck.CoverageError: if the component is neither explicit nor generated.

        """
        if key in self._entries:
            return self._entries[key]

        if self._generator is None:
            raise CoverageError('No component at {key}'.format(key=format_location(*key)))

        if key not in self._cache:
            self._cache[key] = self._generator(*key)

        return self._cache[key]

    def override(self, key: Key, matrix: RatMatrix) -> 'ComponentTable':
        """Return a new table with the component at ``key`` replaced."""
        entries = dict(self._entries)
        entries[key] = matrix
        return ComponentTable(entries=entries, generator=self._generator)

    @property
    def explicit_keys(self) -> List[Key]:
        """The keys of the explicit entries."""
        return list(self._entries)


def as_table(value) -> Optional[ComponentTable]:
    """Normalize a table, a ``{key: matrix}`` dictionary or a generator callable to a ComponentTable."""
    if value is None or isinstance(value, ComponentTable):
        return value
    if isinstance(value, dict):
        return ComponentTable(entries=value)
    if callable(value):
        return ComponentTable(generator=value)

    raise FrobcheckError('Unable to build a component table from {type}'.format(type=type(value).__name__))


class ObjectGrid:
    """Nonempty finite list of source objects on which equations are verified."""

    def __init__(self, category: CategoryInstance, objects):
        """Grid constructor.

        Arguments:
            category (frobcheck.monoidal.CategoryInstance): the source category.
            objects (iterable): the objects of the grid.

        Raises:
            frobcheck.CoverageError: if the grid is empty.
            frobcheck.ShapeError: if an object does not belong to the category.

        """
        self.category = category
        self.objects = tuple(sorted(set(objects)))
        if not self.objects:
            raise CoverageError('Object grid must be nonempty')

        for obj in self.objects:
            expected = Mat if isinstance(category, MatQ) else type(STAR)
            if not isinstance(obj, expected):
                raise ShapeError('Object {obj} does not belong to {cat}'.format(obj=obj, cat=category))

    @classmethod
    def from_dims(cls, dims) -> 'ObjectGrid':
        """Grid of ``Mat(Q)`` objects from a range of dimensions.

        Arguments:
            dims (str, ClusterShell.RangeSet.RangeSet, iterable): the dimensions, e.g. ``'1-3'`` or ``'1,2,4'``.

        Raises:
            frobcheck.CoverageError: if the range is not valid or empty.

        Examples:
            >>> ObjectGrid.from_dims('1-3').objects
            (Mat(dim=1), Mat(dim=2), Mat(dim=3))

        """
        if isinstance(dims, str):
            try:
                dims = RangeSet(dims)
            except RangeSetParseError as e:
                raise CoverageError("Invalid grid range '{dims}': {e}".format(dims=dims, e=e)) from e

        values = dims.intiter() if isinstance(dims, RangeSet) else dims
        return cls(MATQ, [Mat(int(dim)) for dim in values])

    @classmethod
    def for_category(cls, category: CategoryInstance, dims=None) -> 'ObjectGrid':
        """Grid for the given source category: the range of dimensions for ``Mat(Q)``, ``(*,)`` for ``Σ G``."""
        if isinstance(category, SigmaG):
            if dims is not None:
                logger.debug('Ignoring grid %s for one-object category %s', dims, category)
            return cls(category, [STAR])

        return cls.from_dims(dims if dims is not None else DEFAULT_GRID_DIMS)

    def __iter__(self) -> Iterator[MonObject]:
        """Iterate the objects."""
        return iter(self.objects)

    def __len__(self) -> int:
        """Number of objects."""
        return len(self.objects)

    def __contains__(self, obj) -> bool:
        """Whether the object is in the grid."""
        return obj in self.objects

    def __repr__(self) -> str:
        """Representation with the objects."""
        return 'ObjectGrid{objects}'.format(objects=format_location(*self.objects))

    def tuples(self, arity: int) -> Iterator[Tuple[MonObject, ...]]:
        """All the ``arity``-tuples of grid objects, in lexicographic order."""
        return itertools.product(self.objects, repeat=arity)

    def closure(self, arity: int) -> List[MonObject]:
        """Every tensor product of up to ``arity`` grid objects, the unit included."""
        products = {self.category.unit()}
        for length in range(1, arity + 1):
            for objects in self.tuples(length):
                products.add(self.category.tensor_all(*objects))
        return sorted(products)

    def component_pairs(self) -> List[Tuple[MonObject, MonObject]]:
        """The pairs of objects at which the checks read ``r`` and ``i``."""
        cat = self.category
        unit = cat.unit()
        pairs = set()
        for a, b, c in self.tuples(3):
            pairs.update({(a, b), (cat.tensor_obj(a, b), c), (a, cat.tensor_obj(b, c))})
        for a in self.objects:
            pairs.update({(a, unit), (unit, a)})
        return sorted(pairs)


class FrobFunctorData:
    """Structure data of a functor ``source -> Mat(Q)`` with monoidal and optional comonoidal structure."""

    def __init__(self, name: str, source: CategoryInstance, object_map: Callable, morphism_map: Callable, r, r0,
                 i=None, i0=None, kind: str = 'custom', target: CategoryInstance = MATQ):
        """Functor data constructor.

        Arguments:
            name (str): the name of the functor, used in reports.
            source (frobcheck.monoidal.CategoryInstance): the source category.
            object_map (callable): maps a source object to an object of ``Mat(Q)``.
            morphism_map (callable): maps a source morphism to a matrix.
            r (mixed): the ``r_{A,B}: FA⊗FB -> F(A⊗B)`` components, see :py:func:`as_table`.
            r0 (frobcheck.linalg.RatMatrix): the unit ``r0: I -> FI``.
            i (mixed, optional): the ``i_{A,B}: F(A⊗B) -> FA⊗FB`` components, absent for monoidal-only data.
            i0 (frobcheck.linalg.RatMatrix, optional): the counit ``i0: FI -> I``.
            kind (str, optional): the kind of data, one of :py:const:`KINDS`.
            target (frobcheck.monoidal.CategoryInstance, optional): the target category, only ``Mat(Q)`` is supported.

        Raises:
            frobcheck.UnsupportedStructureError: if the target is not ``Mat(Q)``.
            frobcheck.FrobcheckError: on an unknown kind.

        """
        if not isinstance(target, MatQ):
            raise UnsupportedStructureError('Functors into {target} are not supported, only into Mat(Q)'.format(
                target=target))
        if kind not in KINDS:
            raise FrobcheckError("Unknown functor kind '{kind}', expected one of {kinds}".format(
                kind=kind, kinds=KINDS))

        self.name = name
        self.source = source
        self.target = target
        self.object_map = object_map
        self.morphism_map = morphism_map
        self.r = as_table(r)
        self.r0 = r0
        self.i = as_table(i)
        self.i0 = i0
        self.kind = kind

    def __repr__(self) -> str:
        """Representation with name, kind and source."""
        return '<FrobFunctorData {name} ({kind}) on {source}>'.format(
            name=self.name, kind=self.kind, source=self.source)

    @property
    def comonoidal(self) -> bool:
        """Whether the comonoidal structure is present."""
        return self.i is not None and self.i0 is not None

    def obj(self, obj: MonObject) -> Mat:
        """Image of an object.

        Raises:
            frobcheck.ShapeError: if the image is not an object of ``Mat(Q)``.

        """
        image = self.object_map(obj)
        if not isinstance(image, Mat):
            raise ShapeError('Functor {name} maps {obj} to {image}, not an object of Mat(Q)'.format(
                name=self.name, obj=obj, image=image))
        return image

    def dim(self, obj: MonObject) -> int:
        """Dimension of the image of an object."""
        return self.obj(obj).dim

    def mor(self, f) -> RatMatrix:
        """Image of a morphism."""
        return self.morphism_map(f)

    def r_at(self, first: MonObject, second: MonObject) -> RatMatrix:
        """The component ``r_{first,second}``."""
        return self.r.get((first, second))  # type: ignore

    def i_at(self, first: MonObject, second: MonObject) -> RatMatrix:
        """The component ``i_{first,second}``.

        Raises:
            frobcheck.UnsupportedStructureError: if the functor has no comonoidal structure.

        """
        if self.i is None:
            raise UnsupportedStructureError('Functor {name} has no comonoidal structure'.format(name=self.name))
        return self.i.get((first, second))

    def unit_r0(self) -> RatMatrix:
        """The unit ``r0``, raising ShapeError if missing."""
        if self.r0 is None:
            raise ShapeError('Functor {name} has no unit r0'.format(name=self.name))
        return self.r0

    def counit_i0(self) -> RatMatrix:
        """The counit ``i0``.

        Raises:
            frobcheck.UnsupportedStructureError: if the functor has no comonoidal structure.

        """
        if self.i0 is None:
            raise UnsupportedStructureError('Functor {name} has no comonoidal structure'.format(name=self.name))
        return self.i0

    def replace(self, **changes) -> 'FrobFunctorData':
        """Return a shallow copy with the given attributes replaced."""
        data = copy.copy(self)
        for attr, value in changes.items():
            if attr in ('r', 'i'):
                value = as_table(value)
            setattr(data, attr, value)
        return data

    def override(self, component: str, key: Optional[Key], matrix: RatMatrix) -> 'FrobFunctorData':
        """Return a copy with one structure component replaced, the kind becomes ``custom``.

        Arguments:
            component (str): one of ``r``, ``i``, ``r0``, ``i0``.
            key (tuple): the pair of objects for ``r`` and ``i``, ignored for the units.
            matrix (frobcheck.linalg.RatMatrix): the new component.

        Raises:
            frobcheck.FrobcheckError: on an unknown component or a missing table.

        """
        if component in ('r0', 'i0'):
            return self.replace(**{component: matrix, 'kind': 'custom'})
        if component not in ('r', 'i'):
            raise FrobcheckError("Unknown structure component '{component}', expected one of r, i, r0, i0".format(
                component=component))

        table = getattr(self, component)
        if table is None:
            raise UnsupportedStructureError('Functor {name} has no {component} components to override'.format(
                name=self.name, component=component))

        return self.replace(**{component: table.override(tuple(key), matrix), 'kind': 'custom'})  # type: ignore


def describe_morphism(f) -> str:
    """Short description of a spanning morphism: ``E[i,j]`` for an elementary matrix, the label for a group element."""
    if isinstance(f, RatMatrix):
        positions = [key for key, _ in f.items()]
        if len(positions) == 1:
            return 'E[{row},{col}]'.format(row=positions[0][0], col=positions[0][1])
        return '{shape} matrix'.format(shape=format_shape(f))
    return str(f)


def _expect_shape(report: Report, check: str, location: str, producer: Callable[[], RatMatrix],
                  shape: Tuple[int, int]) -> None:
    """Record whether the produced component has the expected shape."""
    try:
        matrix = producer()
    except DimensionLimitError:
        raise
    except FrobcheckError as e:
        report.add_error('structure', check, location, str(e))
        return

    if matrix.shape != shape:
        report.add_error('structure', check, location, 'Expected a {rows}x{cols} matrix, got {shape}'.format(
            rows=shape[0], cols=shape[1], shape=format_shape(matrix)))
    else:
        report.add_pass('structure', check, location)


def structural_validate(F: FrobFunctorData, grid: ObjectGrid) -> Report:
    """Verify that every component read by the checks is present with the shape dictated by the object map.

    Arguments:
        F (frobcheck.functor.FrobFunctorData): the functor.
        grid (frobcheck.functor.ObjectGrid): the grid.

    Returns:
        frobcheck.report.Report: the structure suite, one entry per component.

    """
    report = Report()
    cat = F.source
    if grid.category != cat:
        report.add_error('structure', 'grid', format_location(*grid.objects), 'Grid on {grid} but functor {name} is on '
                         '{cat}'.format(grid=grid.category, name=F.name, cat=cat))
        return report

    try:
        dims = {obj: F.dim(obj) for obj in grid.closure(3)}
    except DimensionLimitError:
        raise
    except FrobcheckError as e:
        report.add_error('structure', 'objects', format_location(*grid.objects), str(e))
        return report

    for source, target in grid.tuples(2):
        shape = (dims[target], dims[source])
        for f in cat.spanning_morphisms(source, target):
            _expect_shape(report, 'morphism', format_location(source, target, describe_morphism(f)),
                          lambda f=f: F.mor(f), shape)

    unit = cat.unit()
    _expect_shape(report, 'r0', format_location(unit), F.unit_r0, (dims[unit], 1))
    if F.comonoidal:
        _expect_shape(report, 'i0', format_location(unit), F.counit_i0, (1, dims[unit]))

    for a, b in grid.component_pairs():
        product = dims[cat.tensor_obj(a, b)]
        _expect_shape(report, 'r', format_location(a, b), lambda a=a, b=b: F.r_at(a, b), (product, dims[a] * dims[b]))
        if F.comonoidal:
            _expect_shape(report, 'i', format_location(a, b), lambda a=a, b=b: F.i_at(a, b),
                          (dims[a] * dims[b], product))

    logger.debug('Validated the structure of %s on %s: %s', F.name, grid, report.summary())
    return report


def _gate(F: FrobFunctorData, grid: ObjectGrid, report: Report) -> bool:
    """Run the structural validation, keep only its errors in the report and tell whether the checks can proceed."""
    structure = structural_validate(F, grid)
    for entry in structure.entries:
        if entry.status != 'pass':
            report.entries.append(entry)
    report.add_note(GRID_NOTE)
    return structure.passed


def _require_comonoidal(F: FrobFunctorData, grid: ObjectGrid, report: Report, suite: str) -> bool:
    """Record an error entry if the functor has no comonoidal structure."""
    if F.comonoidal:
        return True
    report.add_error(suite, 'structure', format_location(*grid.objects),
                     'Functor {name} has no comonoidal structure'.format(name=F.name))
    return False


def _naturality(F: FrobFunctorData, grid: ObjectGrid, report: Report) -> None:
    """Naturality squares of r and i on every pair of spanning morphisms between grid objects."""
    cat = F.source
    squares = 0
    for a, b, a2, b2 in grid.tuples(4):
        for f, g in itertools.product(cat.spanning_morphisms(a, a2), cat.spanning_morphisms(b, b2)):
            location = format_location(a, b, a2, b2, describe_morphism(f), describe_morphism(g))
            report.check('naturality', 'r', location,
                         lambda a2=a2, b2=b2, f=f, g=g: F.r_at(a2, b2) @ linalg.kron(F.mor(f), F.mor(g)),
                         lambda a=a, b=b, f=f, g=g: F.mor(cat.tensor_mor(f, g)) @ F.r_at(a, b))
            if F.comonoidal:
                report.check('naturality', 'i', location,
                             lambda a=a, b=b, f=f, g=g: linalg.kron(F.mor(f), F.mor(g)) @ F.i_at(a, b),
                             lambda a2=a2, b2=b2, f=f, g=g: F.i_at(a2, b2) @ F.mor(cat.tensor_mor(f, g)))
            squares += 1

    logger.debug('Verified %d naturality squares of %s', squares, F.name)


def _monoidal(F: FrobFunctorData, grid: ObjectGrid, report: Report) -> None:
    """Associativity and unit coherence of (r, r0)."""
    cat = F.source
    unit = cat.unit()
    for a, b, c in grid.tuples(3):
        ab, bc = cat.tensor_obj(a, b), cat.tensor_obj(b, c)
        report.check('monoidal', 'associativity', format_location(a, b, c),
                     lambda a=a, b=b, c=c, ab=ab: F.r_at(ab, c) @ linalg.kron(F.r_at(a, b), linalg.identity(F.dim(c))),
                     lambda a=a, b=b, c=c, bc=bc: F.r_at(a, bc) @ linalg.kron(linalg.identity(F.dim(a)), F.r_at(b, c)))

    for a in grid:
        report.check('monoidal', 'left unit', format_location(a),
                     lambda a=a: F.r_at(unit, a) @ linalg.kron(F.unit_r0(), linalg.identity(F.dim(a))),
                     lambda a=a: linalg.identity(F.dim(a)))
        report.check('monoidal', 'right unit', format_location(a),
                     lambda a=a: F.r_at(a, unit) @ linalg.kron(linalg.identity(F.dim(a)), F.unit_r0()),
                     lambda a=a: linalg.identity(F.dim(a)))

    logger.debug('Verified monoidal coherence of %s on %d objects', F.name, len(grid))


def _comonoidal(F: FrobFunctorData, grid: ObjectGrid, report: Report) -> None:
    """Coassociativity and counit coherence of (i, i0)."""
    cat = F.source
    unit = cat.unit()
    for a, b, c in grid.tuples(3):
        ab, bc = cat.tensor_obj(a, b), cat.tensor_obj(b, c)
        report.check('comonoidal', 'coassociativity', format_location(a, b, c),
                     lambda a=a, b=b, c=c, ab=ab: linalg.kron(F.i_at(a, b), linalg.identity(F.dim(c))) @ F.i_at(ab, c),
                     lambda a=a, b=b, c=c, bc=bc: linalg.kron(linalg.identity(F.dim(a)), F.i_at(b, c)) @ F.i_at(a, bc))

    for a in grid:
        report.check('comonoidal', 'left counit', format_location(a),
                     lambda a=a: linalg.kron(F.counit_i0(), linalg.identity(F.dim(a))) @ F.i_at(unit, a),
                     lambda a=a: linalg.identity(F.dim(a)))
        report.check('comonoidal', 'right counit', format_location(a),
                     lambda a=a: linalg.kron(linalg.identity(F.dim(a)), F.counit_i0()) @ F.i_at(a, unit),
                     lambda a=a: linalg.identity(F.dim(a)))

    logger.debug('Verified comonoidal coherence of %s on %d objects', F.name, len(grid))


def _frobenius(F: FrobFunctorData, grid: ObjectGrid, report: Report) -> None:
    """The two Frobenius equations on every grid triple."""
    cat = F.source
    for a, b, c in grid.tuples(3):
        ab, bc = cat.tensor_obj(a, b), cat.tensor_obj(b, c)
        location = format_location(a, b, c)
        # F(A⊗B)⊗FC -> FA⊗F(B⊗C)
        report.check('frobenius', 'left', location,
                     lambda a=a, c=c, ab=ab, bc=bc: F.i_at(a, bc) @ F.r_at(ab, c),
                     lambda a=a, b=b, c=c: (linalg.kron(linalg.identity(F.dim(a)), F.r_at(b, c))
                                            @ linalg.kron(F.i_at(a, b), linalg.identity(F.dim(c)))))
        # FA⊗F(B⊗C) -> F(A⊗B)⊗FC
        report.check('frobenius', 'right', location,
                     lambda a=a, c=c, ab=ab, bc=bc: F.i_at(ab, c) @ F.r_at(a, bc),
                     lambda a=a, b=b, c=c: (linalg.kron(F.r_at(a, b), linalg.identity(F.dim(c)))
                                            @ linalg.kron(linalg.identity(F.dim(a)), F.i_at(b, c))))

    logger.debug('Verified %d Frobenius triples of %s', len(grid) ** 3, F.name)


def check_naturality(F: FrobFunctorData, grid: ObjectGrid) -> Report:
    """Verify the naturality of ``r`` and ``i``.

    For ``Mat(Q)`` sources the squares are checked on all the elementary matrices between grid objects, which is
    complete by bilinearity for functors linear on morphisms. For ``Σ G`` sources all pairs of group elements are
    checked.

    Arguments:
        F (frobcheck.functor.FrobFunctorData): the functor.
        grid (frobcheck.functor.ObjectGrid): the grid.

    Returns:
        frobcheck.report.Report: the naturality suite.

    """
    report = Report()
    if _gate(F, grid, report):
        _naturality(F, grid, report)
    return report


def check_monoidal_coherence(F: FrobFunctorData, grid: ObjectGrid) -> Report:
    """Verify ``r_{A⊗B,C}∘(r_{A,B}⊗1) = r_{A,B⊗C}∘(1⊗r_{B,C})`` and the two unit laws of ``r0``."""
    report = Report()
    if _gate(F, grid, report):
        _monoidal(F, grid, report)
    return report


def check_comonoidal_coherence(F: FrobFunctorData, grid: ObjectGrid) -> Report:
    """Verify ``(i_{A,B}⊗1)∘i_{A⊗B,C} = (1⊗i_{B,C})∘i_{A,B⊗C}`` and the two counit laws of ``i0``."""
    report = Report()
    if _require_comonoidal(F, grid, report, 'comonoidal') and _gate(F, grid, report):
        _comonoidal(F, grid, report)
    return report


def check_frobenius(F: FrobFunctorData, grid: ObjectGrid) -> Report:
    """Verify both Frobenius equations on every grid triple.

    * ``i_{A,B⊗C}∘r_{A⊗B,C} = (1_{FA}⊗r_{B,C})∘(i_{A,B}⊗1_{FC})``
    * ``i_{A⊗B,C}∘r_{A,B⊗C} = (r_{A,B}⊗1_{FC})∘(1_{FA}⊗i_{B,C})``

    Arguments:
        F (frobcheck.functor.FrobFunctorData): the functor.
        grid (frobcheck.functor.ObjectGrid): the grid.

    Returns:
        frobcheck.report.Report: the Frobenius suite.

    """
    report = Report()
    if _require_comonoidal(F, grid, report, 'frobenius') and _gate(F, grid, report):
        _frobenius(F, grid, report)
    return report


def check_split(F: FrobFunctorData, grid: ObjectGrid) -> Report:
    """Verify ``r_{A,B}∘i_{A,B} = id_{F(A⊗B)}`` on all grid pairs."""
    report = Report()
    if not (_require_comonoidal(F, grid, report, 'split') and _gate(F, grid, report)):
        return report

    for a, b in grid.tuples(2):
        report.check('split', 'r∘i', format_location(a, b), lambda a=a, b=b: F.r_at(a, b) @ F.i_at(a, b),
                     lambda a=a, b=b: linalg.identity(F.dim(F.source.tensor_obj(a, b))))
    return report


def is_split(F: FrobFunctorData, grid: ObjectGrid) -> bool:
    """Whether the functor is split on the grid, see :py:func:`check_split`."""
    return check_split(F, grid).passed


def check_all(F: FrobFunctorData, grid: ObjectGrid) -> Report:
    """Run the structural, naturality, monoidal, comonoidal and Frobenius suites."""
    report = Report()
    if not _gate(F, grid, report):
        return report

    _naturality(F, grid, report)
    _monoidal(F, grid, report)
    if _require_comonoidal(F, grid, report, 'comonoidal'):
        _comonoidal(F, grid, report)
        _frobenius(F, grid, report)

    return report


def identity_functor(cat: CategoryInstance = MATQ) -> FrobFunctorData:
    """The identity functor of ``Mat(Q)`` with identity structure maps.

    Raises:
        frobcheck.UnsupportedStructureError: for any other category, functors must land in ``Mat(Q)``.

    """
    if not isinstance(cat, MatQ):
        raise UnsupportedStructureError('Identity functor of {cat} does not land in Mat(Q)'.format(cat=cat))

    def component(a, b):
        return linalg.identity(a.dim * b.dim)

    return FrobFunctorData('identity', cat, lambda obj: obj, lambda f: f, r=component, r0=linalg.identity(1),
                           i=component, i0=linalg.identity(1), kind='identity')


def scaled_identity_functor(r_scale, r0_scale) -> FrobFunctorData:
    """Monoidal-only identity functor of ``Mat(Q)`` with ``r = r_scale·id`` and ``r0 = r0_scale``.

    It is coherent if and only if ``r_scale·r0_scale = 1``, the input of choice to exercise :py:func:`from_strong`.
    """
    return FrobFunctorData(
        'scaled({r}, {r0})'.format(r=linalg.format_rational(r_scale), r0=linalg.format_rational(r0_scale)), MATQ,
        lambda obj: obj, lambda f: f, r=lambda a, b: linalg.identity(a.dim * b.dim).scale(r_scale),
        r0=linalg.scalar(r0_scale), kind='scaled')


def from_strong(F: FrobFunctorData, grid: ObjectGrid) -> FrobFunctorData:
    """Promote a strong monoidal functor to a Frobenius monoidal one with ``i = r⁻¹`` and ``i0 = r0⁻¹``.

    Arguments:
        F (frobcheck.functor.FrobFunctorData): the monoidal data, the comonoidal part is ignored.
        grid (frobcheck.functor.ObjectGrid): the grid on which coherence and invertibility are verified.

    Returns:
        frobcheck.functor.FrobFunctorData: the Frobenius data of kind ``strong``.

    Raises:
        frobcheck.functor.StrongFunctorError: if the data is not coherent or a component is not invertible.

    """
    coherence = check_monoidal_coherence(F, grid)
    if not coherence.passed:
        first = next(entry for entry in coherence.entries if entry.status != 'pass')
        raise StrongFunctorError('Functor {name} is not monoidal: {check} {status} at {location}'.format(
            name=F.name, check=first.check, status=first.status, location=first.location))

    for a, b in grid.component_pairs():
        if not linalg.is_iso(F.r_at(a, b)):
            raise StrongFunctorError('Component r of {name} at {pair} is not invertible'.format(
                name=F.name, pair=format_location(a, b)))
    if not linalg.is_iso(F.unit_r0()):
        raise StrongFunctorError('Unit r0 of {name} is not invertible'.format(name=F.name))

    logger.debug('Promoted %s to a Frobenius monoidal functor on %s', F.name, grid)
    return F.replace(name='strong({name})'.format(name=F.name), kind='strong',
                     i=lambda a, b: linalg.inverse(F.r_at(a, b)), i0=linalg.inverse(F.unit_r0()))


def compose_frobenius(G: FrobFunctorData, F: FrobFunctorData) -> FrobFunctorData:
    """The composite ``GF`` with ``r = G(r^F)∘r^G``, ``r0 = G(r0^F)∘r0^G``, ``i = i^G∘G(i^F)``, ``i0 = i0^G∘G(i0^F)``.

    Raises:
        frobcheck.ShapeError: if the target of ``F`` is not the source of ``G``.

    """
    if F.target != G.source:
        raise ShapeError('Unable to compose {g} after {f}: target {target} is not source {source}'.format(
            g=G.name, f=F.name, target=F.target, source=G.source))

    def r_component(a, b):
        return G.mor(F.r_at(a, b)) @ G.r_at(F.obj(a), F.obj(b))

    def i_component(a, b):
        return G.i_at(F.obj(a), F.obj(b)) @ G.mor(F.i_at(a, b))

    comonoidal = F.comonoidal and G.comonoidal
    return FrobFunctorData(
        '{g}∘{f}'.format(g=G.name, f=F.name), F.source, lambda obj: G.obj(F.obj(obj)), lambda f: G.mor(F.mor(f)),
        r=r_component, r0=G.mor(F.unit_r0()) @ G.unit_r0(), i=i_component if comonoidal else None,
        i0=G.counit_i0() @ G.mor(F.counit_i0()) if comonoidal else None, kind='composite')
