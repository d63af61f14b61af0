import pytest

from nilorbit import (
    Family,
    OrbitLabel,
    Partition,
    collapse,
    dominance_leq,
    enumerate_valid,
    is_valid,
    orbit_dim,
    parse_partition,
    partitions_of,
    transpose,
)


def P(text: str) -> Partition:
    return parse_partition(text)


class TestPartitionType:
    def test_parse_and_literal_round_trip(self):
        for text in ("5", "4,3,3,1", "2,2,1", "1,1,1,1,1"):
            assert parse_partition(text).literal() == text

    def test_str_form(self):
        assert str(P("5,4,4,1")) == "[5,4,4,1]"

    def test_empty(self):
        assert parse_partition("").parts == ()
        assert parse_partition("").n == 0

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 3))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Partition((3, 0))
        with pytest.raises(ValueError):
            Partition((3, -1))

    def test_rejects_malformed_text(self):
        with pytest.raises(ValueError):
            parse_partition("3,x")

    def test_container_protocol(self):
        p = P("4,3,3,1")
        assert len(p) == 4
        assert list(p) == [4, 3, 3, 1]
        assert p[0] == 4 and p[-1] == 1
        assert p.n == 11
        assert p.multiplicity(3) == 2
        assert p.multiplicity(7) == 0


class TestValidity:
    def test_family_b(self):
        assert is_valid(P("5"), Family.B)
        assert is_valid(P("3,1,1"), Family.B)
        assert is_valid(P("2,2,1"), Family.B)
        # even part with odd multiplicity
        assert not is_valid(P("4,3,3,1"), Family.B)
        # wrong total parity
        assert not is_valid(P("3,1"), Family.B)

    def test_family_c(self):
        assert is_valid(P("4"), Family.C)
        assert is_valid(P("2,1,1"), Family.C)
        assert not is_valid(P("3,1"), Family.C)
        assert not is_valid(P("3"), Family.C)

    def test_family_d(self):
        assert is_valid(P("3,1"), Family.D)
        assert is_valid(P("2,2"), Family.D)
        assert not is_valid(P("2,1,1"), Family.D)
        assert not is_valid(P("3"), Family.D)

    def test_counts_at_rank_two(self):
        assert len(enumerate_valid(5, Family.B)) == 4
        assert len(enumerate_valid(4, Family.C)) == 4
        assert len(enumerate_valid(4, Family.D)) == 3

    def test_enumerate_rejects_wrong_parity(self):
        with pytest.raises(ValueError):
            enumerate_valid(4, Family.B)
        with pytest.raises(ValueError):
            enumerate_valid(5, Family.C)

    def test_family_from_letter(self):
        assert Family.from_letter("b") is Family.B
        with pytest.raises(ValueError):
            Family.from_letter("E")


class TestTranspose:
    def test_spots(self):
        assert transpose(P("4,3,3,1")) == P("4,3,3,1")
        assert transpose(P("3,1,1")) == P("3,1,1")
        assert transpose(P("2,2,1")) == P("3,2")
        assert transpose(P("5")) == P("1,1,1,1,1")
        assert transpose(P("")) == P("")

    def test_involution(self):
        for n in range(11):
            for p in partitions_of(n):
                assert transpose(transpose(p)) == p


class TestDominance:
    def test_chain(self):
        assert dominance_leq(P("1,1,1,1,1"), P("2,2,1"))
        assert dominance_leq(P("2,2,1"), P("3,1,1"))
        assert dominance_leq(P("3,1,1"), P("5"))
        assert not dominance_leq(P("3,1,1"), P("2,2,1"))

    def test_reflexive_and_antisymmetric(self):
        ps = partitions_of(8)
        for a in ps:
            assert dominance_leq(a, a)
        for a in ps:
            for b in ps:
                if dominance_leq(a, b) and dominance_leq(b, a):
                    assert a == b

    def test_incomparable_totals_rejected(self):
        with pytest.raises(ValueError):
            dominance_leq(P("3"), P("2,2"))


class TestCollapse:
    def test_spots(self):
        assert collapse(P("4,3,3,1"), Family.B) == P("3,3,3,1,1")
        assert collapse(P("3,2"), Family.B) == P("3,1,1")
        assert collapse(P("6,5,1"), Family.C) == P("6,4,2")
        assert collapse(P("3,1"), Family.C) == P("2,2")
        assert collapse(P("4"), Family.D) == P("3,1")
        assert collapse(P("5,4,4,4,4,2"), Family.B) == P("5,4,4,4,4,1,1")

    def test_identity_on_valid(self):
        for fam, n in ((Family.B, 9), (Family.C, 8), (Family.D, 8)):
            for p in enumerate_valid(n, fam):
                assert collapse(p, fam) == p

    def test_result_is_valid_and_dominated(self):
        for fam, n in ((Family.B, 9), (Family.C, 10), (Family.D, 10)):
            for p in partitions_of(n):
                c = collapse(p, fam)
                assert is_valid(c, fam)
                assert dominance_leq(c, p)

    def test_maximality_small(self):
        """The collapse dominates every valid partition below the input."""
        for fam, n in ((Family.B, 7), (Family.C, 8), (Family.D, 6)):
            valid = enumerate_valid(n, fam)
            for p in partitions_of(n):
                c = collapse(p, fam)
                for v in valid:
                    if dominance_leq(v, p):
                        assert dominance_leq(v, c)

    def test_wrong_parity_rejected(self):
        with pytest.raises(ValueError):
            collapse(P("3,1"), Family.B)


class TestOrbitDim:
    def test_spots(self):
        assert orbit_dim(P("5"), Family.B) == 8
        assert orbit_dim(P("3,1,1"), Family.B) == 6
        assert orbit_dim(P("2,2,1"), Family.B) == 4
        assert orbit_dim(P("1,1,1,1,1"), Family.B) == 0
        assert orbit_dim(P("2,2"), Family.C) == 6
        assert orbit_dim(P("4"), Family.C) == 8
        assert orbit_dim(P("3,1"), Family.D) == 4
        assert orbit_dim(P("2,2"), Family.D) == 2

    def test_label_argument(self):
        lab = OrbitLabel(P("2,2"), Family.D, "I")
        assert orbit_dim(lab) == 2

    def test_bare_partition_needs_family(self):
        with pytest.raises(ValueError):
            orbit_dim(P("5"))

    def test_invalid_partition_rejected(self):
        with pytest.raises(ValueError):
            orbit_dim(P("3,1"), Family.B)


class TestOrbitLabel:
    def test_very_even_labels(self):
        OrbitLabel(P("2,2"), Family.D, "I")
        OrbitLabel(P("2,2"), Family.D, "II")
        OrbitLabel(P("2,2"), Family.D)
        assert OrbitLabel(P("2,2"), Family.D).is_very_even

    def test_label_rejected_when_not_very_even(self):
        with pytest.raises(ValueError):
            OrbitLabel(P("3,1"), Family.D, "I")
        with pytest.raises(ValueError):
            OrbitLabel(P("2,2"), Family.C, "I")

    def test_bad_label_text(self):
        with pytest.raises(ValueError):
            OrbitLabel(P("2,2"), Family.D, "III")

    def test_invalid_partition(self):
        with pytest.raises(ValueError):
            OrbitLabel(P("2,1,1"), Family.D)
