import random

import pytest

from sirenless.characters import Character
from sirenless.discourse import DiscourseMode
from sirenless.metrics import SentenceSentiment
from sirenless.scoring import (
    DetectorThresholds,
    detect_patterns,
    load_thresholds,
    radar_data,
    readability_level,
    reliability,
    sentiment_bin,
    sentiment_level,
    summarize,
    writing_style,
)


def hist(n=0, a=0, q=0, d=0, b=0):
    return {
        DiscourseMode.NARRATION: n,
        DiscourseMode.ARGUMENT: a,
        DiscourseMode.QUOTE: q,
        DiscourseMode.DESCRIPTION: d,
        DiscourseMode.BACKGROUND: b,
    }


def sent(polarity, subjectivity=0.0):
    return SentenceSentiment(polarity, subjectivity, abs(polarity) > 0.5)


class TestWritingStyle:
    def test_balanced_fixture(self):
        got = writing_style(hist(n=10, a=2, q=1, d=1, b=0))
        assert got.grade == pytest.approx(0.2)
        assert got.level == "Balanced"

    def test_zero_numerator_rigorous(self):
        got = writing_style(hist(n=10))
        assert got.grade == 0.0
        assert got.level == "Rigorous"

    def test_literative_fixture(self):
        got = writing_style(hist(n=5, a=5))
        assert got.grade == pytest.approx(1.0)
        assert got.level == "Literative"

    def test_negative_numerator_clamped(self):
        got = writing_style(hist(n=4, d=3, b=2))
        assert got.grade == 0.0
        assert got.level == "Rigorous"

    def test_no_narration_uses_floor_one(self):
        got = writing_style(hist(a=3))
        assert got.grade == 1.0  # 3/1 clamped


class TestSentimentLevel:
    @pytest.mark.parametrize(
        "polarity,level",
        [
            (0.05, "Calm"),
            (-0.15, "Regular"),
            (0.2, "Emotional"),
            (0.0, "Calm"),
            (-1.0, "Emotional"),
            (0.1, "Regular"),
        ],
    )
    def test_bins(self, polarity, level):
        assert sentiment_level(polarity) == level


class TestReadabilityLevel:
    @pytest.mark.parametrize(
        "score,level",
        [(59.635, "Medium"), (100.0, "Easy"), (0.0, "Hard"), (30.0, "Medium"), (70.0, "Easy")],
    )
    def test_bins(self, score, level):
        assert readability_level(score) == level


class TestReliability:
    def test_medium_fixture(self):
        got = reliability(0.1, 0.3)
        assert got.grade == pytest.approx(60.0)
        assert got.level == "Medium"

    def test_zero_case_high(self):
        got = reliability(0.0, 0.0)
        assert got.grade == 100.0
        assert got.level == "High"

    def test_clamped_to_zero_low(self):
        got = reliability(0.5, 0.6)
        assert got.grade == 0.0
        assert got.level == "Low"

    def test_negative_polarity_uses_magnitude(self):
        assert reliability(-0.1, 0.3).grade == pytest.approx(60.0)


class TestBinPartitions:
    def test_writing_style_partition_sweep(self):
        for i in range(0, 1001):
            grade = i / 1000
            level = writing_style(hist(n=1000, a=i)).level
            assert level in ("Rigorous", "Balanced", "Literative")
            expected = "Rigorous" if grade < 0.2 else "Balanced" if grade < 0.4 else "Literative"
            assert level == expected

    def test_sentiment_partition_sweep(self):
        for i in range(-1000, 1001):
            level = sentiment_level(i / 1000)
            assert level in ("Calm", "Regular", "Emotional")

    def test_readability_partition_sweep(self):
        for i in range(0, 100001, 100):
            level = readability_level(i / 1000)
            assert level in ("Easy", "Medium", "Hard")

    def test_reliability_partition_sweep(self):
        for i in range(0, 100001, 100):
            grade = i / 1000
            got = reliability(0.0, 1.0 - grade / 100.0)
            assert got.level in ("Low", "Medium", "High")

    def test_sentiment_radar_bins_partition(self):
        for i in range(-1000, 1001):
            assert sentiment_bin(i / 1000) in range(5)


class TestRadar:
    def test_example_bins(self):
        sentiments = [sent(-0.6), sent(0.0), sent(0.3)]
        got = radar_data(sentiments, hist(n=3))
        assert got.sentiment_axes == (1, 0, 1, 1, 0)

    def test_empty_document(self):
        got = radar_data([], hist())
        assert got.sentiment_axes == (0, 0, 0, 0, 0)
        assert got.discourse_axes == (0.0, 0.0, 0.0, 0.0, 0.0)

    def test_all_narration_share(self):
        got = radar_data([sent(0.0)] * 4, hist(n=4))
        assert got.discourse_axes == (1.0, 0.0, 0.0, 0.0, 0.0)

    def test_boundary_values(self):
        got = radar_data([sent(-0.5), sent(-0.1), sent(0.1), sent(0.5)], hist(n=4))
        assert got.sentiment_axes == (1, 1, 0, 1, 1)


class TestThresholdConfig:
    def test_defaults(self):
        th = DetectorThresholds()
        assert th.emotional_polarity == 0.3
        assert th.version == "1"

    def test_load_overrides(self, tmp_path):
        path = tmp_path / "thresholds.json"
        path.write_text('{"version": "2", "argument_share": 0.5}')
        th = load_thresholds(str(path))
        assert th.version == "2"
        assert th.argument_share == 0.5
        assert th.dominance_share == 0.75  # untouched default

    def test_unknown_key_rejected(self, tmp_path):
        path = tmp_path / "thresholds.json"
        path.write_text('{"nonsense": 1}')
        from sirenless.errors import ParseError

        with pytest.raises(ParseError):
            load_thresholds(str(path))


def run_detectors(sentiments, modes=None, subjectivity=None, flesch=0.0, characters=()):
    modes = modes if modes is not None else [DiscourseMode.NARRATION] * len(sentiments)
    if subjectivity is None:
        subjectivity = (
            sum(s.subjectivity for s in sentiments) / len(sentiments) if sentiments else 0.0
        )
    report = detect_patterns(sentiments, modes, subjectivity, flesch, list(characters))
    return {f.kind: f for f in report.findings}


class TestDetectors:
    def test_dominance_positive(self):
        findings = run_detectors([sent(0.6)] * 6)
        assert findings["SentimentDominance"].severity == "alert"
        assert findings["SentimentDominance"].evidence == tuple(range(6))

    def test_dominance_negative_absent_when_few(self):
        findings = run_detectors([sent(0.6)] * 4)
        assert "SentimentDominance" not in findings

    def test_oscillation_alternating(self):
        sentiments = [sent(0.5 if i % 2 == 0 else -0.5) for i in range(8)]
        findings = run_detectors(sentiments)
        assert "SentimentOscillation" in findings
        assert findings["SentimentOscillation"].evidence == tuple(range(8))

    def test_oscillation_absent_when_one_sided(self):
        findings = run_detectors([sent(0.6)] * 7 + [sent(-0.6)])
        assert "SentimentOscillation" not in findings

    def test_calm_article_no_findings(self):
        findings = run_detectors([sent(0.0, 0.0)] * 10)
        assert findings == {}

    def test_subjectivity_warning_then_alert(self):
        warning = run_detectors([sent(0.0, 0.25)] * 4)
        assert warning["HighSubjectivity"].severity == "warning"
        alert = run_detectors([sent(0.0, 0.45)] * 4)
        assert alert["HighSubjectivity"].severity == "alert"

    def test_easy_read_info(self):
        findings = run_detectors([sent(0.0)], flesch=55.0)
        assert findings["EasyRead"].severity == "info"
        assert "EasyRead" not in run_detectors([sent(0.0)], flesch=25.0)

    def test_argument_heavy(self):
        modes = [DiscourseMode.ARGUMENT] * 3 + [DiscourseMode.NARRATION] * 9
        findings = run_detectors([sent(0.0)] * 12, modes=modes)
        assert findings["ArgumentHeavy"].severity == "warning"
        assert findings["ArgumentHeavy"].evidence == (0, 1, 2)

    def test_argument_light_not_flagged(self):
        modes = [DiscourseMode.ARGUMENT] * 2 + [DiscourseMode.NARRATION] * 10
        assert "ArgumentHeavy" not in run_detectors([sent(0.0)] * 12, modes=modes)

    def test_character_bias_warning(self):
        sentiments = [sent(0.4), sent(0.4), sent(0.4), sent(0.0)]
        hero = Character(0, "Ann Hale", (), (0, 1, 2))
        findings = run_detectors(sentiments, characters=[hero])
        assert findings["CharacterSentimentBias"].severity == "warning"
        assert findings["CharacterSentimentBias"].evidence == (0,)

    def test_character_bias_opposite_signs_alert(self):
        sentiments = [sent(0.4)] * 3 + [sent(-0.4)] * 3
        hero = Character(0, "Ann Hale", (), (0, 1, 2))
        villain = Character(1, "Bo Drax", (), (3, 4, 5))
        findings = run_detectors(sentiments, characters=[hero, villain])
        assert findings["CharacterSentimentBias"].severity == "alert"
        assert findings["CharacterSentimentBias"].evidence == (0, 1)

    def test_character_bias_needs_three_mentions(self):
        sentiments = [sent(0.9), sent(0.9)]
        minor = Character(0, "Cy Roe", (), (0, 1))
        assert "CharacterSentimentBias" not in run_detectors(
            sentiments, characters=[minor]
        )

    def test_emotional_quotes(self):
        sentiments = [sent(0.8)] * 3 + [sent(0.0)] * 3
        modes = [DiscourseMode.QUOTE] * 6
        findings = run_detectors(sentiments, modes=modes)
        assert findings["EmotionalQuotes"].severity == "alert"
        assert findings["EmotionalQuotes"].evidence == (0, 1, 2)

    def test_quotes_calm_not_flagged(self):
        sentiments = [sent(0.1)] * 6
        modes = [DiscourseMode.QUOTE] * 6
        assert "EmotionalQuotes" not in run_detectors(sentiments, modes=modes)

    def test_dominance_monotone_in_magnitude(self):
        base = [sent(p) for p in (0.3, 0.35, 0.4, 0.45, 0.5, -0.05, 0.0)]
        findings = run_detectors(base)
        assert "SentimentDominance" in findings
        scaled = [
            sent(min(1.0, p.polarity * 1.5) if p.polarity > 0 else p.polarity)
            for p in base
        ]
        assert "SentimentDominance" in run_detectors(scaled)


def oracle_detectors(polarities, subjectivities, modes, flesch, characters, th):
    """Independent re-statement of the detector rules, kept deliberately
    naive; disagreements with the engine mean a bug somewhere."""
    found = set()
    emotional = [i for i, p in enumerate(polarities) if abs(p) >= th.emotional_polarity]
    pos = [i for i in emotional if polarities[i] > 0]
    neg = [i for i in emotional if polarities[i] < 0]
    if len(emotional) >= th.dominance_min_sentences:
        if max(len(pos), len(neg)) / len(emotional) >= th.dominance_share:
            found.add("SentimentDominance")
        if (
            len(pos) / len(emotional) >= th.oscillation_share
            and len(neg) / len(emotional) >= th.oscillation_share
        ):
            found.add("SentimentOscillation")
    art_subj = sum(subjectivities) / len(subjectivities) if subjectivities else 0.0
    if art_subj >= th.subjectivity_warning:
        found.add("HighSubjectivity")
    if flesch > th.easy_read_score:
        found.add("EasyRead")
    if modes and sum(m == DiscourseMode.ARGUMENT for m in modes) / len(modes) >= th.argument_share:
        found.add("ArgumentHeavy")
    for character in characters:
        if len(character.mention_sentences) >= th.character_min_mentions:
            vals = [polarities[i] for i in character.mention_sentences]
            if vals and abs(sum(vals) / len(vals)) >= th.character_bias_mean:
                found.add("CharacterSentimentBias")
    quotes = [i for i, m in enumerate(modes) if m == DiscourseMode.QUOTE]
    if len(quotes) >= th.quote_min_sentences:
        extreme = [i for i in quotes if abs(polarities[i]) > 0.5]
        if len(extreme) / len(quotes) >= th.emotional_quote_share:
            found.add("EmotionalQuotes")
    return found


class TestDetectorOracle:
    def test_randomized_agreement(self):
        rng = random.Random(123)
        th = DetectorThresholds()
        for _ in range(1000):
            n = rng.randint(0, 30)
            polarities = [round(rng.uniform(-1, 1), 3) for _ in range(n)]
            subjectivities = [round(rng.uniform(0, 1), 3) for _ in range(n)]
            sentiments = [
                SentenceSentiment(p, s, abs(p) > 0.5)
                for p, s in zip(polarities, subjectivities)
            ]
            modes = [rng.choice(list(DiscourseMode)) for _ in range(n)]
            flesch = round(rng.uniform(0, 100), 2)
            characters = []
            for cid in range(rng.randint(0, 3)):
                if n == 0:
                    break
                mentions = sorted(
                    rng.sample(range(n), rng.randint(1, min(6, n)))
                )
                characters.append(Character(cid, f"P{cid}", (), tuple(mentions)))
            art_subj = (
                sum(subjectivities) / len(subjectivities) if subjectivities else 0.0
            )
            report = detect_patterns(sentiments, modes, art_subj, flesch, characters, th)
            got = {f.kind for f in report.findings}
            expected = oracle_detectors(
                polarities, subjectivities, modes, flesch, characters, th
            )
            assert got == expected
