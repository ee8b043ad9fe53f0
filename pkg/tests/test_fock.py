import math

import pytest

from distinguon.config import Settings
from distinguon.errors import SizeError, ValidationError
from distinguon.fock import (
	basis_size,
	canonical_word,
	consistent_suboccupations,
	enumerate_occupations,
	flatten_system_label,
	index_occupations,
	multiplicity_of_type,
	type_of,
	unflatten_system_label,
)
from distinguon.models import ModeWord, Occupation, SystemLabelOccupation


def test_enumerate_two_modes_two_bosons():
	occs = enumerate_occupations(2, 2)
	assert [o.counts for o in occs] == [(2, 0), (1, 1), (0, 2)]


@pytest.mark.parametrize("m, n", [(1, 0), (1, 3), (3, 2), (4, 3), (5, 4)])
def test_enumeration_matches_basis_size(m, n):
	occs = enumerate_occupations(m, n)
	assert len(occs) == basis_size(m, n) == math.comb(m + n - 1, n)
	assert len(set(occs)) == len(occs)
	assert all(o.n == n and o.m == m for o in occs)


def test_canonical_order_is_descending():
	occs = enumerate_occupations(3, 3)
	assert occs[0].counts == (3, 0, 0)
	assert occs[-1].counts == (0, 0, 3)
	assert [o.counts for o in occs] == sorted((o.counts for o in occs), reverse=True)


def test_zero_bosons_has_single_vacuum():
	assert [o.counts for o in enumerate_occupations(3, 0)] == [(0, 0, 0)]


def test_enumeration_rejects_bad_arguments():
	with pytest.raises(ValidationError):
		enumerate_occupations(0, 1)
	with pytest.raises(ValidationError):
		enumerate_occupations(2, -1)


def test_enumeration_cap():
	with pytest.raises(SizeError):
		enumerate_occupations(10, 10, Settings(max_enumeration=100))


def test_consistent_suboccupations():
	subs = consistent_suboccupations(Occupation((1, 2, 0)), 2)
	assert [s.counts for s in subs] == [(1, 1, 0), (0, 2, 0)]
	assert consistent_suboccupations(Occupation((1, 1)), 0)[0].counts == (0, 0)
	with pytest.raises(ValidationError):
		consistent_suboccupations(Occupation((1, 1)), 3)


def test_type_and_multiplicity():
	assert type_of(ModeWord((2, 1, 2)), 3).counts == (1, 2, 0)
	assert multiplicity_of_type(Occupation((1, 2, 0))) == 3
	assert multiplicity_of_type(Occupation((1, 1, 1))) == 6
	with pytest.raises(ValidationError):
		type_of(ModeWord((4,)), 3)


def test_canonical_word_round_trip():
	s = Occupation((1, 2, 0))
	word = canonical_word(s)
	assert word.letters == (1, 2, 2)
	assert type_of(word, 3) == s


def test_system_label_flatten_round_trip():
	t = SystemLabelOccupation(((1, 0), (0, 2), (1, 1)))
	flat = flatten_system_label(t)
	assert flat.counts == (1, 0, 0, 2, 1, 1)
	assert unflatten_system_label(flat, 2) == t
	assert t.system_occupation().counts == (1, 2, 2)
	with pytest.raises(ValidationError):
		unflatten_system_label(flat, 4)


def test_occupation_parse():
	assert Occupation.parse("1, 1,0").counts == (1, 1, 0)
	with pytest.raises(ValidationError):
		Occupation.parse("1,,0")
	with pytest.raises(ValidationError):
		Occupation.parse("1,-1")


@pytest.mark.parametrize("m, n", [(1, 3), (2, 2), (3, 2), (3, 3), (4, 2)])
def test_multiplicities_count_every_word(m, n):
	assert sum(multiplicity_of_type(t) for t in enumerate_occupations(m, n)) == m**n


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_system_label_pairing_is_a_bijection(m, n):
	for d in range(1, n + 1):
		grids = set()
		for flat in enumerate_occupations(m * d, n):
			t = unflatten_system_label(flat, d)
			assert t.m == m and t.label_modes == d and t.n == n
			assert flatten_system_label(t) == flat
			grids.add(t)
		assert len(grids) == basis_size(m * d, n)


def test_index_follows_enumeration_order():
	occs = enumerate_occupations(3, 2)
	index = index_occupations(occs)
	assert index[Occupation((2, 0, 0))] == 0
	assert [index[o] for o in occs] == list(range(len(occs)))
