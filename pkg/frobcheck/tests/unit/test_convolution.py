"""Convolution on representations of finite abelian groups tests."""
import random

import pytest

from frobcheck import convolution, FrobcheckError, linalg, ShapeError
from frobcheck.convolution import BaseFunctor, CoendShape, WellDefinednessError
from frobcheck.linalg import RatMatrix
from frobcheck.monoidal import cyclic_base, product_base
from frobcheck.tests import assert_witness, first_failure, naive_rank


SWAP = RatMatrix.from_rows([[0, 1], [1, 0]])
TRIVIAL = cyclic_base(1)
BASES = (TRIVIAL, cyclic_base(2), cyclic_base(3), product_base(cyclic_base(2), cyclic_base(2)))


@pytest.fixture()
def regular_z2(z2):
    """The regular representation of the cyclic group of order 2 with the group algebra structure."""
    return convolution.regular_functor(z2)


def test_regular_representation(z2):
    """The regular action permutes the basis by left multiplication."""
    rho = convolution.regular_representation(z2)
    assert rho['e'] == linalg.identity(2)
    assert rho['a'] == SWAP
    assert convolution.right_translation(cyclic_base(3), 'a') == RatMatrix.from_rows(
        [[0, 0, 1], [1, 0, 0], [0, 1, 0]])


def test_regular_functor(regular_z2):
    """The regular functor should be a Frobenius monoidal functor on the one-object category."""
    assert regular_z2.name == 'regular(Z/2)'
    assert repr(regular_z2) == '<BaseFunctor regular(Z/2) of Z/2 on Q^2>'
    assert convolution.convolution_unit(regular_z2.base).name == 'J'
    assert regular_z2.act('a') == SWAP


@pytest.mark.parametrize('rho, kwargs, exception, message', (
    ({'e': linalg.identity(2)}, {}, ShapeError, "has no action for 'a'"),
    ({'e': linalg.identity(2), 'a': linalg.identity(3)}, {}, ShapeError, "Action of 'a' in F must be 2x2, got 3x3"),
    ({'e': linalg.identity(2).scale(2), 'a': SWAP}, {}, FrobcheckError, 'Action of the identity in F is not the'),
    ({'e': linalg.identity(2), 'a': linalg.identity(2).scale(2)}, {}, FrobcheckError,
     r"is not a homomorphism at \('a', 'a'\)"),
    ({'e': linalg.identity(2), 'a': SWAP}, {'r': linalg.identity(2)}, ShapeError,
     'Structure map r of F must be 2x4, got 2x2'),
))
def test_base_functor_invalid(z2, rho, kwargs, exception, message):
    """Invalid actions and structure maps should be rejected."""
    with pytest.raises(exception, match=message):
        BaseFunctor(z2, 2, rho, **kwargs)


def test_base_functor_not_validated(z2):
    """Negative controls can skip the homomorphism validation."""
    F = BaseFunctor(z2, 2, {'e': linalg.identity(2), 'a': linalg.identity(2).scale(2)}, validate=False)
    assert F.act('a') == linalg.identity(2).scale(2)


def test_base_functor_override(regular_z2):
    """Overriding the action disables the validation, other fields are checked by name."""
    broken = regular_z2.override('rho', linalg.identity(2).scale(2), element='a')
    assert broken.act('a') == linalg.identity(2).scale(2)
    assert broken.r == regular_z2.r
    assert regular_z2.override('i0', linalg.zeros(1, 2)).i0.is_zero()
    with pytest.raises(FrobcheckError, match='Overriding rho requires a group element'):
        regular_z2.override('rho', SWAP)
    with pytest.raises(FrobcheckError, match="Unknown element 'b'"):
        regular_z2.override('rho', SWAP, element='b')
    with pytest.raises(FrobcheckError, match="Unknown representation field 'mu'"):
        regular_z2.override('mu', SWAP)


def test_coend_trivial(z2):
    """The coend of the trivial one-variable functor identifies all hom labels."""
    space = convolution.coend(z2, CoendShape('trivial', 1, 1, lambda elements: linalg.identity(1)))
    assert space.ambient_dim == 2
    assert space.dimension == 1
    assert convolution.quotient_dimension(space) == 1
    assert space.describe_relation(3) == (('a',), 'a', 0)
    assert space.action['a'] == linalg.identity(1)


def test_convolution_product_dimension(regular_z2):
    """The convolution of the regular functor with itself should have the dimension of the group algebra."""
    product = convolution.convolution_product(regular_z2, regular_z2)
    assert product.ambient_dim == 8
    assert product.dimension == 2
    assert convolution.quotient_dimension(product) == 2
    assert product.ambient_dim - naive_rank(product.relations.to_lists()) == 2


def test_convolution_product_mismatch(regular_z2):
    """Representations of different groups should not be convolved."""
    with pytest.raises(ShapeError, match='Unable to convolve regular'):
        convolution.convolution_product(regular_z2, convolution.regular_functor(cyclic_base(3)))


def test_induced_map_shape(regular_z2):
    """The ambient map must go between the ambient spaces."""
    product = convolution.convolution_product(regular_z2, regular_z2)
    with pytest.raises(ShapeError, match='Ambient map must be 8x8, got 3x3'):
        convolution.induced_map(product, product, linalg.identity(3))


def test_induced_map_not_well_defined(z2):
    """A map that does not send relations to relations should raise with the first offending relation."""
    space = convolution.coend(z2, CoendShape('trivial', 1, 1, lambda elements: linalg.identity(1)))
    projection = RatMatrix.from_rows([[1, 0]])
    with pytest.raises(WellDefinednessError, match='Map trivial -> trivial is not well defined') as excinfo:
        convolution.induced_map(space, space, projection.transpose() @ projection)

    assert not excinfo.value.defect.is_zero()
    assert excinfo.value.relation[0] == ('a',)


def test_canonical_evaluations(regular_z2):
    """The canonical evaluations of the regular functor should be isomorphisms."""
    eval3, iso3 = convolution.canonical_eval3(regular_z2)
    eval2, iso2 = convolution.canonical_eval2(regular_z2)
    assert iso3 and iso2
    assert eval3.shape == eval2.shape == (2, 2)


def test_canonical_eval2_retraction(regular_z2):
    """The 2-variable evaluation isomorphism should be derived from the 3-variable one."""
    report = convolution.canonical_eval2_retraction(regular_z2)
    assert report.passed, first_failure(report)
    assert [entry.check for entry in report.entries] == [
        'eval3 iso', 'hk = 1', 'l∘copr = copr', 'lh = 1', 'hl = 1', 'eval2 iso']
    assert report.entries[0].location == '(regular(Z/2), Z/2)'


def test_canonical_eval_not_homomorphism(regular_z2):
    """An action that is not a homomorphism should make the 3-variable evaluation fail."""
    broken = regular_z2.override('rho', linalg.identity(2).scale(2), element='a')
    _, iso3 = convolution.canonical_eval3(broken)
    assert not iso3

    report = convolution.canonical_eval2_retraction(broken)
    assert len(report.entries) == 1
    entry = report.entries[0]
    assert (entry.check, entry.status) == ('eval3', 'error')
    assert entry.message.startswith(convolution.FLAT_FAILS)
    assert report.exit_code == 2


def test_induced_frobenius_check(regular_z2):
    """The Frobenius squares and the chain through F*F should commute for the regular functor."""
    report = convolution.induced_frobenius_check(regular_z2)
    assert report.passed, first_failure(report)
    checks = [entry.check for entry in report.entries if entry.suite == 'convolution']
    assert checks == ['left square', 'right square'] + ['chain backward∘forward', 'chain forward∘backward'] * 2
    assert report.entries[-1].location == '(regular(Z/2), F*F, FA⊗F(BC))'


def test_induced_frobenius_check_not_equivariant(regular_z2):
    """A multiplication that is not equivariant should be reported as an equivariance bug."""
    broken = regular_z2.override('r', RatMatrix({(0, 0): 1}, (2, 4)))
    report = convolution.induced_frobenius_check(broken)
    failing = {entry.check for entry in report.entries if entry.status == 'fail'}
    assert {'left square well-definedness', 'right square well-definedness'} <= failing

    entry = next(entry for entry in report.entries if entry.check == 'left square well-definedness')
    assert entry.message.startswith('equivariance bug: Map FA⊗FB⊗FC of regular(Z/2) -> FA⊗F(BC) of regular(Z/2)')
    assert_witness(entry)


def test_induced_frobenius_check_missing_structure(z2):
    """A representation without structure maps should be an error."""
    report = convolution.induced_frobenius_check(convolution.convolution_unit(z2))
    entry = report.entries[-1]
    assert (entry.suite, entry.check, entry.status) == ('convolution', 'structure', 'error')
    assert entry.message == 'Representation J has no r, r0, i, i0'
    assert report.exit_code == 2


def test_run_convolution_suite(regular_z2):
    """The whole suite should pass on the regular functor."""
    report = convolution.run_convolution_suite(regular_z2)
    assert report.passed, first_failure(report)
    assert report.entries[-1].check == 'F*F dimension'
    assert {entry.suite for entry in report.entries} >= {'convolution', 'naturality', 'monoidal', 'frobenius'}


def _permutation(targets):
    """The permutation matrix sending the basis vector j to the basis vector targets[j]."""
    return RatMatrix({(target, source): 1 for source, target in enumerate(targets)}, (len(targets), len(targets)))


def _trivial_functor(dim):
    """A representation of the trivial group on Q^dim without structure maps."""
    return BaseFunctor(TRIVIAL, dim, {'e': linalg.identity(dim)}, name='V{dim}'.format(dim=dim))


@pytest.mark.parametrize('seed', range(5))
def test_coend_relation_order(seed, regular_z2):
    """Reordering the relations should not change the quotient, reordering the ambient basis changes it by an iso."""
    space = convolution.convolution_product(regular_z2, regular_z2)
    rng = random.Random(seed)

    columns = list(range(space.relations.cols))
    rng.shuffle(columns)
    projection, section = linalg.cokernel(space.relations @ _permutation(columns))
    assert projection == space.projection
    assert section == space.section

    rows = list(range(space.ambient_dim))
    rng.shuffle(rows)
    permutation = _permutation(rows)
    projection, _ = linalg.cokernel(permutation @ space.relations)
    assert projection.rows == space.dimension
    change = projection @ permutation @ space.section
    assert linalg.is_iso(change)
    assert projection @ permutation == change @ space.projection


def test_convolution_product_trivial_group():
    """Without relations beyond the identity the convolution of Q with itself is Q."""
    product = convolution.convolution_product(_trivial_functor(1), _trivial_functor(1))
    assert product.ambient_dim == 1
    assert product.dimension == 1
    assert product.action['e'] == linalg.identity(1)


def test_convolution_unit_trivial_group():
    """The convolution unit of the trivial group is the one dimensional trivial representation."""
    unit = convolution.convolution_unit(TRIVIAL)
    assert unit.dim == 1
    assert unit.act('e') == linalg.identity(1)


@pytest.mark.parametrize('dim', (1, 2, 3))
def test_canonical_evaluations_trivial_group(dim):
    """Over the trivial group both canonical evaluations are isomorphisms for any space."""
    F = _trivial_functor(dim)
    eval3, iso3 = convolution.canonical_eval3(F)
    eval2, iso2 = convolution.canonical_eval2(F)
    assert iso3 and iso2
    assert eval3.shape == eval2.shape == (dim, dim)
    report = convolution.canonical_eval2_retraction(F)
    assert report.passed, first_failure(report)


@pytest.mark.parametrize('base', BASES, ids=lambda base: base.name)
def test_convolution_product_regular(base):
    """The convolution of the regular functor with itself should have the dimension of the group algebra."""
    F = convolution.regular_functor(base)
    product = convolution.convolution_product(F, F)
    assert product.ambient_dim == base.order ** 3
    assert product.dimension == base.order
    assert product.ambient_dim - naive_rank(product.relations.to_lists()) == base.order


@pytest.mark.parametrize('base', BASES, ids=lambda base: base.name)
def test_canonical_eval2_retraction_regular(base):
    """The retraction of the canonical evaluations should pass on the regular functor of every group."""
    report = convolution.canonical_eval2_retraction(convolution.regular_functor(base))
    assert report.passed, first_failure(report)
    assert report.entries[-1].check == 'eval2 iso'


@pytest.mark.parametrize('base', (TRIVIAL, cyclic_base(3)), ids=lambda base: base.name)
def test_induced_frobenius_check_regular(base):
    """The Frobenius squares should commute for the group algebra, the unit algebra for the trivial group."""
    F = convolution.regular_functor(base)
    report = convolution.induced_frobenius_check(F)
    assert report.passed, first_failure(report)
    checks = [entry.check for entry in report.entries if entry.suite == 'convolution']
    assert checks[:2] == ['left square', 'right square']
