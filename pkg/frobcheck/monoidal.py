"""Strict monoidal categories: Mat(Q) and the one-object categories of finite abelian groups."""
import itertools
import logging

from abc import ABCMeta, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from frobcheck import FrobcheckError, ShapeError, UnsupportedStructureError
from frobcheck import linalg
from frobcheck.linalg import RatMatrix


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""


@dataclass(frozen=True, order=True)
class Mat:
    """Object of ``Mat(Q)``: the vector space ``Q^dim``."""

    dim: int

    def __post_init__(self):
        """Reject negative dimensions."""
        if self.dim < 0:
            raise ShapeError('Invalid negative dimension {dim}'.format(dim=self.dim))

    def __str__(self) -> str:
        """Print just the dimension."""
        return str(self.dim)


@dataclass(frozen=True, order=True)
class Star:
    """The unique object of a one-object category."""

    def __str__(self) -> str:
        """Print the object as ``*``."""
        return '*'


STAR = Star()
""":py:class:`frobcheck.monoidal.Star`: the unique object of ``Σ G``."""

MonObject = Union[Mat, Star]
"""Type alias for the objects of the supported categories."""


class FiniteBase:
    """Finite abelian group given by its labels, multiplication table and identity.

    The constructor verifies the group axioms exhaustively.
    """

    def __init__(self, labels: Sequence[str], table: Dict[Tuple[str, str], str], identity: str, name: str = ''):
        """Group constructor.

        Arguments:
            labels (list): the element labels, their order fixes the basis order of the group algebra.
            table (dict): the total multiplication table ``{(g, h): gh}``.
            identity (str): the label of the identity element.
            name (str, optional): a human readable name.

        Raises:
            frobcheck.FrobcheckError: if the table is not the one of a finite abelian group.

        """
        self.labels = tuple(labels)
        self.name = name or 'G{order}'.format(order=len(self.labels))
        self.identity = identity
        self._table = dict(table)
        self._index = {label: position for position, label in enumerate(self.labels)}
        self._inverses: Dict[str, str] = {}
        self._validate()

    def _validate(self) -> None:
        """Exhaustively check closure, associativity, unit, inverses and commutativity."""
        if not self.labels or len(set(self.labels)) != len(self.labels):
            raise FrobcheckError('Group labels must be non-empty and unique, got {labels}'.format(labels=self.labels))
        if self.identity not in self._index:
            raise FrobcheckError("Identity '{e}' is not one of the labels {labels}".format(
                e=self.identity, labels=self.labels))

        for g, h in itertools.product(self.labels, repeat=2):
            if self._table.get((g, h)) not in self._index:
                raise FrobcheckError("Multiplication table is not total or not closed at ({g}, {h})".format(g=g, h=h))
            if self._table[(g, h)] != self._table[(h, g)]:
                raise FrobcheckError('Group is not abelian: {g}{h} != {h}{g}'.format(g=g, h=h))

        for g, h, k in itertools.product(self.labels, repeat=3):
            if self.mul(self.mul(g, h), k) != self.mul(g, self.mul(h, k)):
                raise FrobcheckError('Multiplication is not associative at ({g}, {h}, {k})'.format(g=g, h=h, k=k))

        for g in self.labels:
            if self.mul(self.identity, g) != g:
                raise FrobcheckError("'{e}' is not a unit for '{g}'".format(e=self.identity, g=g))
            inverses = [h for h in self.labels if self.mul(g, h) == self.identity]
            if not inverses:
                raise FrobcheckError("Element '{g}' has no inverse".format(g=g))
            self._inverses[g] = inverses[0]

    @property
    def order(self) -> int:
        """The number of elements of the group."""
        return len(self.labels)

    def mul(self, g: str, h: str) -> str:
        """Group product ``gh``."""
        return self._table[(g, h)]

    def prod(self, elements: Sequence[str]) -> str:
        """Product of any number of elements, the identity for none."""
        result = self.identity
        for element in elements:
            result = self.mul(result, element)
        return result

    def inverse(self, g: str) -> str:
        """Inverse of ``g``."""
        return self._inverses[g]

    def index(self, g: str) -> int:
        """Position of ``g`` in the basis of the group algebra.

        Raises:
            frobcheck.FrobcheckError: if the label is not an element of the group.

        """
        try:
            return self._index[g]
        except KeyError as e:
            raise FrobcheckError("Unknown element '{g}' of group {name}".format(g=g, name=self.name)) from e

    def __eq__(self, other) -> bool:
        """Two bases are equal when they have the same labels, identity and table."""
        if not isinstance(other, FiniteBase):
            return NotImplemented
        return (self.labels, self.identity, self._table) == (other.labels, other.identity, other._table)

    def __hash__(self) -> int:
        """Hash on the labels."""
        return hash(self.labels)

    def __repr__(self) -> str:
        """Representation with the name and the labels."""
        return 'FiniteBase({name}: {labels})'.format(name=self.name, labels=', '.join(self.labels))


def _power_label(power: int) -> str:
    """Label of ``a^power`` in a cyclic group."""
    if power == 0:
        return 'e'
    if power == 1:
        return 'a'
    return 'a^{power}'.format(power=power)


def cyclic_base(n: int) -> FiniteBase:
    """The cyclic group of order ``n`` with labels ``e, a, a^2, ...``.

    Examples:
        >>> cyclic_base(3).mul('a', 'a^2')
        'e'

    """
    if n < 1:
        raise FrobcheckError('Invalid order {n} for a cyclic group, expected a positive integer'.format(n=n))

    labels = [_power_label(power) for power in range(n)]
    table = {(labels[p], labels[q]): labels[(p + q) % n] for p in range(n) for q in range(n)}
    return FiniteBase(labels, table, 'e', name='Z/{n}'.format(n=n))


def product_base(first: FiniteBase, second: FiniteBase) -> FiniteBase:
    """Direct product of two groups, labels are ``(g,h)``."""
    def label(g, h):
        return '({g},{h})'.format(g=g, h=h)

    labels = [label(g, h) for g in first.labels for h in second.labels]
    table = {}
    for (g1, h1), (g2, h2) in itertools.product(itertools.product(first.labels, second.labels), repeat=2):
        table[(label(g1, h1), label(g2, h2))] = label(first.mul(g1, g2), second.mul(h1, h2))

    return FiniteBase(labels, table, label(first.identity, second.identity),
                      name='{first}x{second}'.format(first=first.name, second=second.name))


class CategoryInstance(metaclass=ABCMeta):
    """Strict monoidal category abstract class.

    Morphisms of each instance have their own concrete representation: matrices for ``Mat(Q)``, group labels for
    ``Σ G``.
    """

    name = ''
    """:py:class:`str`: the name of the instance, derived classes must set it."""

    braided = False
    """:py:class:`bool`: whether the instance supplies a braiding."""

    @abstractmethod
    def unit(self) -> MonObject:
        """The unit object ``I``."""

    @abstractmethod
    def tensor_obj(self, first: MonObject, second: MonObject) -> MonObject:
        """Tensor product of two objects."""

    @abstractmethod
    def tensor_mor(self, f, g):
        """Tensor product of two morphisms."""

    @abstractmethod
    def compose(self, g, f):
        """Composite ``g∘f``, i.e. ``f`` then ``g``."""

    @abstractmethod
    def identity(self, obj: MonObject):
        """Identity morphism of an object."""

    @abstractmethod
    def spanning_morphisms(self, source: MonObject, target: MonObject) -> List:
        """A list of morphisms ``source -> target`` such that every property linear in the morphism holds everywhere
        if it holds on the list."""

    @abstractmethod
    def hom_shape_ok(self, f, source: MonObject, target: MonObject) -> bool:
        """Whether ``f`` is a morphism ``source -> target``."""

    def braid(self, first: MonObject, second: MonObject) -> RatMatrix:
        """The braiding ``c: X⊗Y -> Y⊗X``.

        Raises:
            frobcheck.UnsupportedStructureError: if the instance is not braided.

        """
        raise UnsupportedStructureError('Category {name} has no braiding'.format(name=self.name))

    def braid_inverse(self, first: MonObject, second: MonObject) -> RatMatrix:
        """The inverse braiding ``c⁻¹: Y⊗X -> X⊗Y`` of ``c_{X,Y}``.

        Raises:
            frobcheck.UnsupportedStructureError: if the instance is not braided.

        """
        raise UnsupportedStructureError('Category {name} has no braiding'.format(name=self.name))

    def tensor_all(self, *objects: MonObject) -> MonObject:
        """Tensor product of any number of objects, the unit for none."""
        result = self.unit()
        for obj in objects:
            result = self.tensor_obj(result, obj)
        return result

    def __repr__(self) -> str:
        """Return the name of the instance."""
        return self.name


class MatQ(CategoryInstance):
    """The symmetric strict monoidal category of finite dimensional rational vector spaces and matrices."""

    name = 'Mat(Q)'
    braided = True

    def unit(self) -> Mat:
        """Concrete implementation of parent abstract method.

        :Parameters:
            according to parent :py:meth:`frobcheck.monoidal.CategoryInstance.unit`.
        """
        return Mat(1)

    def tensor_obj(self, first: MonObject, second: MonObject) -> Mat:
        """``Mat(m)⊗Mat(n) = Mat(mn)``.

        Raises:
            frobcheck.ShapeError: if one of the objects is not an object of ``Mat(Q)``.

        """
        _ensure_mat(first, second)
        return Mat(first.dim * second.dim)  # type: ignore

    def tensor_mor(self, f: RatMatrix, g: RatMatrix) -> RatMatrix:
        """Kronecker product."""
        return linalg.kron(f, g)

    def compose(self, g: RatMatrix, f: RatMatrix) -> RatMatrix:
        """Matrix product ``g·f``."""
        return linalg.mat_mul(g, f)

    def identity(self, obj: MonObject) -> RatMatrix:
        """Identity matrix of the object's dimension."""
        _ensure_mat(obj)
        return linalg.identity(obj.dim)  # type: ignore

    def spanning_morphisms(self, source: MonObject, target: MonObject) -> List[RatMatrix]:
        """The elementary matrices ``target.dim x source.dim``."""
        _ensure_mat(source, target)
        return linalg.elementary_matrices(target.dim, source.dim)  # type: ignore

    def hom_shape_ok(self, f, source: MonObject, target: MonObject) -> bool:
        """Whether ``f`` is a ``target.dim x source.dim`` matrix."""
        return (isinstance(f, RatMatrix) and isinstance(source, Mat) and isinstance(target, Mat)
                and f.shape == (target.dim, source.dim))

    def braid(self, first: MonObject, second: MonObject) -> RatMatrix:
        """The commutation matrix swapping the factors of ``first⊗second``."""
        _ensure_mat(first, second)
        return linalg.commutation_matrix(first.dim, second.dim)  # type: ignore

    def braid_inverse(self, first: MonObject, second: MonObject) -> RatMatrix:
        """Inverse of the commutation matrix: its transpose, as it is a permutation matrix."""
        return self.braid(first, second).transpose()


MATQ = MatQ()
""":py:class:`frobcheck.monoidal.MatQ`: the instance of ``Mat(Q)``."""


class SigmaG(CategoryInstance):
    """The one-object strict monoidal category ``Σ G`` of a finite abelian group ``G``.

    Morphisms are group elements, composition and tensor product are both the group multiplication.
    """

    def __init__(self, base: FiniteBase):
        """Constructor.

        Arguments:
            base (frobcheck.monoidal.FiniteBase): the group.

        """
        self.base = base
        self.name = 'Σ{name}'.format(name=base.name)

    def unit(self) -> Star:
        """The unique object."""
        return STAR

    def tensor_obj(self, first: MonObject, second: MonObject) -> Star:
        """``*⊗* = *``.

        Raises:
            frobcheck.ShapeError: if one of the objects is not ``*``.

        """
        if first != STAR or second != STAR:
            raise ShapeError('Objects ({first}, {second}) do not belong to {name}'.format(
                first=first, second=second, name=self.name))
        return STAR

    def tensor_mor(self, f: str, g: str) -> str:
        """Group product."""
        return self.base.mul(f, g)

    def compose(self, g: str, f: str) -> str:
        """Group product."""
        return self.base.mul(g, f)

    def identity(self, obj: MonObject) -> str:
        """The identity element."""
        return self.base.identity

    def spanning_morphisms(self, source: MonObject, target: MonObject) -> List[str]:
        """All group elements."""
        return list(self.base.labels)

    def hom_shape_ok(self, f, source: MonObject, target: MonObject) -> bool:
        """Whether ``f`` is an element of the group."""
        return source == STAR and target == STAR and f in self.base.labels

    def __eq__(self, other) -> bool:
        """Equal when over the same group."""
        if not isinstance(other, SigmaG):
            return NotImplemented
        return self.base == other.base

    def __hash__(self) -> int:
        """Hash on the group."""
        return hash(self.base)


def _ensure_mat(*objects: MonObject) -> None:
    """Raise ShapeError unless every object is an object of Mat(Q)."""
    for obj in objects:
        if not isinstance(obj, Mat):
            raise ShapeError('Object {obj} does not belong to Mat(Q)'.format(obj=obj))


def tensor_obj(cat: CategoryInstance, first: MonObject, second: MonObject) -> MonObject:
    """Tensor product of objects in the given category, see :py:meth:`CategoryInstance.tensor_obj`."""
    return cat.tensor_obj(first, second)


def tensor_mor(cat: CategoryInstance, f, g):
    """Tensor product of morphisms in the given category, see :py:meth:`CategoryInstance.tensor_mor`."""
    return cat.tensor_mor(f, g)


def braid(cat: CategoryInstance, first: MonObject, second: MonObject) -> RatMatrix:
    """Braiding of the given category, see :py:meth:`CategoryInstance.braid`."""
    return cat.braid(first, second)


def braid_inverse(cat: CategoryInstance, first: MonObject, second: MonObject) -> RatMatrix:
    """Inverse braiding of the given category, see :py:meth:`CategoryInstance.braid_inverse`."""
    return cat.braid_inverse(first, second)
