import pytest

from src.core.exceptions import BoundaryError
from src.modules.hypergroup.models import ChebyshevHypergroup
from src.modules.hypergroup.services.axioms import reflect, validate_axioms
from src.modules.hypergroup.services.builders import make_chebyshev, make_cyclic, make_from_table, make_integers, tabulate
from src.modules.hypergroup.models import FiniteMeasure

CHECKS = ["probability", "identity", "involution", "identity_support", "associativity", "haar"]


def corrupted_chebyshev():
    spec = tabulate(make_chebyshev(20), range(21))
    row = next(r for r in spec["table"] if r["x"] == 1 and r["y"] == 1)
    row["support"], row["weights"] = [0, 2], [0.6, 0.4]
    return make_from_table(spec)


class TestValidateAxioms:
    def test_integers_window_10(self):
        report = validate_axioms(make_integers(10))
        assert [c.name for c in report.checks] == CHECKS
        assert report.passed
        assert report.commutative
        assert report.scope == "truncation-relative"

    def test_chebyshev_window_20(self, chebyshev):
        report = validate_axioms(chebyshev)
        assert report.passed
        assert report.commutative
        assert report.window == list(range(21))

    @pytest.mark.parametrize("m", range(1, 13))
    def test_cyclic(self, m):
        report = validate_axioms(make_cyclic(m))
        assert report.passed
        assert report.commutative

    def test_corrupted_table_fails_with_witnesses(self):
        report = validate_axioms(corrupted_chebyshev(), list(range(11)))
        assert not report.passed
        assert report.check("probability").passed
        assert report.check("associativity").witness == [1, 1, 2]
        assert report.check("haar").witness == [1, 0]

    def test_insufficient_halo_raises(self):
        with pytest.raises(BoundaryError):
            validate_axioms(ChebyshevHypergroup(window=20, halo=20))


def test_reflect(integers):
    mu = FiniteMeasure.from_mapping({1: 0.25, -3: 0.75})
    assert reflect(integers, mu).as_dict() == {-1: 0.25, 3: 0.75}
