"""The braided category of Frobenius monoidal functors under the pointwise tensor product."""
import logging

from typing import Callable

from frobcheck import FrobcheckError, linalg, ShapeError, UnsupportedStructureError
from frobcheck.duality import check_nat_transf, check_triangles, cupcap, identity_transformation, mate_inverse
from frobcheck.duality import MonComonNatTransf, transport_dual
from frobcheck.functor import FrobFunctorData, ObjectGrid
from frobcheck.linalg import RatMatrix
from frobcheck.monoidal import CategoryInstance, Mat, MATQ, MatQ, MonObject
from frobcheck.report import format_location, Report


logger = logging.getLogger(__name__)
"""logging.Logger: The logging instance."""
HOMSET_NOTE = 'Hom-sets of Frob(A, B) are not enumerated, naturality is verified against generated transformations.'
""":py:class:`str`: the note attached to category checks."""


def pointwise_tensor(F: FrobFunctorData, G: FrobFunctorData) -> FrobFunctorData:
    """The pointwise tensor product ``(F⊗G)A = FA⊗GA`` of two Frobenius monoidal functors.

    * ``r = (r^F⊗r^G)∘(1⊗c⁻¹_{FB,GA}⊗1)`` and ``r0 = r0^F⊗r0^G``
    * ``i = (1⊗c_{FB,GA}⊗1)∘(i^F⊗i^G)`` and ``i0 = i0^F⊗i0^G``

    The target of every :py:class:`frobcheck.functor.FrobFunctorData` is ``Mat(Q)``, its braiding is the commutation
    matrix.

    Raises:
        frobcheck.ShapeError: if the functors have different sources.

    """
    if F.source != G.source:
        raise ShapeError('Functors {f} and {g} have different sources'.format(f=F.name, g=G.name))

    target = F.target

    def r_component(a, b):
        swap = linalg.kron_all(linalg.identity(F.dim(a)), target.braid_inverse(F.obj(b), G.obj(a)),
                               linalg.identity(G.dim(b)))
        return linalg.kron(F.r_at(a, b), G.r_at(a, b)) @ swap

    def i_component(a, b):
        swap = linalg.kron_all(linalg.identity(F.dim(a)), target.braid(F.obj(b), G.obj(a)), linalg.identity(G.dim(b)))
        return swap @ linalg.kron(F.i_at(a, b), G.i_at(a, b))

    comonoidal = F.comonoidal and G.comonoidal
    return FrobFunctorData(
        '({f}⊗{g})'.format(f=F.name, g=G.name), F.source, lambda obj: Mat(F.dim(obj) * G.dim(obj)),
        lambda f: linalg.kron(F.mor(f), G.mor(f)), r=r_component, r0=linalg.kron(F.unit_r0(), G.unit_r0()),
        i=i_component if comonoidal else None,
        i0=linalg.kron(F.counit_i0(), G.counit_i0()) if comonoidal else None, kind='pointwise_tensor')


def unit_functor(source: CategoryInstance = MATQ) -> FrobFunctorData:
    """The functor constant at the unit object, the unit of the pointwise tensor product."""
    one = linalg.identity(1)
    return FrobFunctorData('U', source, lambda obj: Mat(1), lambda f: one, r=lambda a, b: one, r0=one,
                           i=lambda a, b: one, i0=one, kind='unit')


def frob_braiding(F: FrobFunctorData, G: FrobFunctorData, obj: MonObject) -> RatMatrix:
    """The component at ``obj`` of the braiding ``F⊗G -> G⊗F``: the braiding of ``FA`` and ``GA``."""
    return F.target.braid(F.obj(obj), G.obj(obj))


Braiding = Callable[[FrobFunctorData, FrobFunctorData, MonObject], RatMatrix]
"""type: the components ``(F, G, A) -> (F⊗G)A -> (G⊗F)A`` of a candidate braiding."""


def braiding_transformation(F: FrobFunctorData, G: FrobFunctorData,
                            braiding: Braiding = frob_braiding) -> MonComonNatTransf:
    """The braiding ``F⊗G -> G⊗F`` as a candidate monoidal and comonoidal transformation."""
    return MonComonNatTransf(pointwise_tensor(F, G), pointwise_tensor(G, F), lambda obj: braiding(F, G, obj),
                             name='c({f},{g})'.format(f=F.name, g=G.name))


def _compare_functors(report: Report, check: str, first: FrobFunctorData, second: FrobFunctorData,
                      grid: ObjectGrid) -> None:
    """Componentwise equality of two functors: objects, morphisms, r, r0, i and i0."""
    cat = first.source
    for obj in grid:
        report.check('frobcat', '{check} objects'.format(check=check), format_location(obj),
                     lambda obj=obj: linalg.identity(first.dim(obj)), lambda obj=obj: linalg.identity(second.dim(obj)))

    for a, a2 in grid.tuples(2):
        for f in cat.spanning_morphisms(a, a2):
            report.check('frobcat', '{check} morphisms'.format(check=check), format_location(a, a2),
                         lambda f=f: first.mor(f), lambda f=f: second.mor(f))

    for a, b in grid.tuples(2):
        location = format_location(a, b)
        report.check('frobcat', '{check} r'.format(check=check), location, lambda a=a, b=b: first.r_at(a, b),
                     lambda a=a, b=b: second.r_at(a, b))
        report.check('frobcat', '{check} i'.format(check=check), location, lambda a=a, b=b: first.i_at(a, b),
                     lambda a=a, b=b: second.i_at(a, b))

    location = format_location(cat.unit())
    report.check('frobcat', '{check} r0'.format(check=check), location, first.unit_r0, second.unit_r0)
    report.check('frobcat', '{check} i0'.format(check=check), location, first.counit_i0, second.counit_i0)


def _transformation_family(F: FrobFunctorData, obj: MonObject):
    """Components at ``obj`` of the generated endo-transformations involving ``F``.

    Each item is ``(label, X, alpha)`` with ``alpha: XA -> XA``: the identity of ``F``, the mate of the identity of
    ``F`` and the self braiding of ``F⊗F``, the only one that is not an identity.
    """
    identity = identity_transformation(F, F)
    family = [('id', F, identity.at(obj))]
    if isinstance(F.source, MatQ):
        try:
            family.append(('mate', F, mate_inverse(identity, cupcap(obj.dim))))  # type: ignore
        except FrobcheckError as e:
            logger.debug('Skipping the mate-induced transformation of %s at %s: %s', F.name, obj, e)

    family.append(('braiding', pointwise_tensor(F, F), frob_braiding(F, F, obj)))
    return family


def check_frob_category(F: FrobFunctorData, G: FrobFunctorData, H: FrobFunctorData, grid: ObjectGrid,
                        braiding: Braiding = frob_braiding) -> Report:
    """Verify the braided monoidal structure of ``Frob(A, B)`` on three functors.

    * associativity of the pointwise tensor and its unit laws with :py:func:`unit_functor`, componentwise;
    * both hexagons of the braiding and its symmetry ``c∘c = id``;
    * the braiding is a monoidal and comonoidal transformation, natural in ``A``;
    * naturality of the braiding in ``F`` and ``G`` against generated transformations;
    * the transported ``cupcap`` self-dualities of the grid objects pass their triangles through ``F``, ``G``, ``H``
      and ``F⊗G``.

    Arguments:
        F (frobcheck.functor.FrobFunctorData): the first functor.
        G (frobcheck.functor.FrobFunctorData): the second functor.
        H (frobcheck.functor.FrobFunctorData): the third functor.
        grid (frobcheck.functor.ObjectGrid): the grid.
        braiding (callable, optional): the braiding components to verify, :py:func:`frob_braiding` by default.

    Returns:
        frobcheck.report.Report: the category suite.

    """
    report = Report()
    report.add_note(HOMSET_NOTE)
    unit = unit_functor(F.source)
    fg, gh = pointwise_tensor(F, G), pointwise_tensor(G, H)

    _compare_functors(report, 'associativity', pointwise_tensor(fg, H), pointwise_tensor(F, gh), grid)
    _compare_functors(report, 'left unit', pointwise_tensor(unit, F), F, grid)
    _compare_functors(report, 'right unit', pointwise_tensor(F, unit), F, grid)

    for obj in grid:
        id_f, id_g, id_h = (linalg.identity(item.dim(obj)) for item in (F, G, H))
        location = format_location(obj)
        report.check('frobcat', 'hexagon left', location, lambda obj=obj: braiding(fg, H, obj),
                     lambda obj=obj, id_f=id_f, id_g=id_g: (
                         linalg.kron(braiding(F, H, obj), id_g) @ linalg.kron(id_f, braiding(G, H, obj))))
        report.check('frobcat', 'hexagon right', location, lambda obj=obj: braiding(F, gh, obj),
                     lambda obj=obj, id_g=id_g, id_h=id_h: (
                         linalg.kron(id_g, braiding(F, H, obj)) @ linalg.kron(braiding(F, G, obj), id_h)))
        report.check('frobcat', 'symmetry', location, lambda obj=obj: braiding(G, F, obj) @ braiding(F, G, obj),
                     lambda obj=obj: linalg.identity(F.dim(obj) * G.dim(obj)))

        for label, source, alpha in _transformation_family(F, obj):
            report.check('frobcat', 'naturality in F ({label})'.format(label=label), location,
                         lambda obj=obj, source=source, alpha=alpha, id_g=id_g: (
                             braiding(source, G, obj) @ linalg.kron(alpha, id_g)),
                         lambda obj=obj, source=source, alpha=alpha, id_g=id_g: (
                             linalg.kron(id_g, alpha) @ braiding(source, G, obj)))
        for label, source, alpha in _transformation_family(G, obj):
            report.check('frobcat', 'naturality in G ({label})'.format(label=label), location,
                         lambda obj=obj, source=source, alpha=alpha, id_f=id_f: (
                             braiding(F, source, obj) @ linalg.kron(id_f, alpha)),
                         lambda obj=obj, source=source, alpha=alpha, id_f=id_f: (
                             linalg.kron(alpha, id_f) @ braiding(F, source, obj)))

    for entry in check_nat_transf(braiding_transformation(F, G, braiding), grid).entries:
        report.entries.append(entry)

    if isinstance(F.source, MatQ):
        for obj in grid:
            for functor in (F, G, H, fg):
                try:
                    transported = transport_dual(functor, cupcap(obj.dim))  # type: ignore
                except UnsupportedStructureError as e:
                    report.add_error('frobcat', 'self-duality', format_location(functor.name, obj), str(e))
                    continue
                for entry in check_triangles(transported).entries:
                    report.entries.append(entry)

    logger.debug('Verified the braided structure of Frob on (%s, %s, %s): %s', F.name, G.name, H.name,
                 report.summary())
    return report
