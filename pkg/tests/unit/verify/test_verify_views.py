import pytest
from pydantic import ValidationError
from horadam_quat.verify.views import CampaignResult, IdentityTally, IntRange, VerifyConfig


class TestIntRange:
    """Tests for IntRange parsing."""

    @pytest.mark.parametrize("text,lo,hi", [
        ("-3..3", -3, 3),
        ("1..1", 1, 1),
        ("7", 7, 7),
        ("-6..12", -6, 12),
        (" 2 .. 5 ", 2, 5),
    ])
    def test_parse(self, text, lo, hi):
        assert IntRange.parse(text) == IntRange(lo=lo, hi=hi)

    @pytest.mark.parametrize("text", ["", "1..", "a..b", "1...3", "1.5"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            IntRange.parse(text)

    def test_values_and_empty_range(self):
        assert list(IntRange(lo=-1, hi=1).values()) == [-1, 0, 1]
        assert list(IntRange(lo=3, hi=2).values()) == []

    def test_clip(self):
        assert IntRange(lo=-6, hi=12).clip((-4, 8)) == IntRange(lo=-4, hi=8)
        assert str(IntRange(lo=-6, hi=12)) == "-6..12"


class TestVerifyConfig:
    """Tests for VerifyConfig validation and defaults."""

    def test_defaults(self):
        config = VerifyConfig()
        assert config.p == IntRange(lo=-3, hi=3)
        assert config.q == IntRange(lo=-3, hi=3)
        assert config.a == IntRange(lo=-2, hi=2)
        assert config.idx == IntRange(lo=-6, hi=12)
        assert len(config.identities) == 20
        assert config.jobs == 1
        assert config.q_values() == [-3, -2, -1, 1, 2, 3]

    def test_q_range_of_only_zero_rejected(self):
        with pytest.raises(ValidationError):
            VerifyConfig(q=IntRange(lo=0, hi=0))

    def test_unknown_identity_rejected(self):
        with pytest.raises(ValidationError):
            VerifyConfig(identities=['cassini', 'fermat'])

    def test_identities_follow_registry_order(self):
        config = VerifyConfig(identities=['cassini', 'lemma1-ab', 'cassini'])
        assert config.identities == ['lemma1-ab', 'cassini']

    def test_jobs_must_be_positive(self):
        with pytest.raises(ValidationError):
            VerifyConfig(jobs=0)

    def test_cross_indices(self):
        assert VerifyConfig().cross_indices() == range(-4, 9)
        assert VerifyConfig(cross_idx=IntRange(lo=0, hi=2)).cross_indices() == range(0, 3)
        assert VerifyConfig(idx=IntRange(lo=0, hi=3)).cross_indices() == range(0, 4)


class TestCampaignResult:
    """Tests for CampaignResult aggregation."""

    def test_exit_code(self):
        result = CampaignResult(tallies={'cassini': IdentityTally(passed=3, skipped=2)})
        assert result.exit_code == 0
        result.tallies['catalan'] = IdentityTally(failed=1)
        assert result.exit_code == 1

    def test_errors_fail_the_campaign(self):
        assert CampaignResult(tallies={'cassini': IdentityTally(errors=1)}).exit_code == 1

    def test_summary(self):
        result = CampaignResult(tallies={'cassini': IdentityTally(passed=3, flagged=1),
                                         'catalan': IdentityTally(passed=2, skipped=4)})
        summary = result.summary()
        assert summary['total'] == {'passed': 5, 'failed': 0, 'skipped': 4, 'flagged': 1, 'errors': 0}
        assert summary['identities']['catalan']['skipped'] == 4
