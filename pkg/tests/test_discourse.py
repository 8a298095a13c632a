import math
import random

import pytest

from sirenless.discourse import (
    CorpusSentence,
    DiscourseMode,
    DiscourseModel,
    FeatureVector,
    SentenceContext,
    TIE_ORDER,
    classify,
    evaluate,
    extract_features,
    predict_corpus,
    rule_baseline,
    train,
)
from sirenless.errors import EvalError, ModelError, TrainError
from sirenless.ingest import ingest
from sirenless.pipeline import label_document


def features_for(text, **ctx):
    doc = ingest(text)
    return extract_features(doc.sentences[0], SentenceContext(**ctx))


class TestFeatures:
    def test_quoted_fraction_and_reporting_verb(self):
        got = features_for('"We will win," he said.')
        assert got.quoted_token_fraction == pytest.approx(3 / 5)
        assert got.has_reporting_verb

    def test_year_regex(self):
        got = features_for("In 1997 the treaty was signed.")
        assert got.date_or_year_present

    def test_month_name(self):
        assert features_for("The vote happens in March.").date_or_year_present

    def test_plain_number_is_not_date(self):
        assert not features_for("There were 42 seats.").date_or_year_present

    def test_empty_sentence_is_zero_vector(self):
        doc = ingest("...")
        got = extract_features(doc.sentences[0], SentenceContext())
        assert got.to_dict() == {"token_count": 3.0}

    def test_numeric_density(self):
        got = features_for("Prices rose 12 percent to 85 dollars.")
        assert got.numeric_density == pytest.approx(2 / 7)

    def test_first_person(self):
        assert features_for("I saw it happen.").first_person
        assert not features_for("They saw it happen.").first_person

    def test_entity_recurrence_needs_context(self):
        assert not features_for("Smith returned home.").entity_recurrence
        got = features_for(
            "Smith returned home.", seen_entities=frozenset({"smith"})
        )
        assert got.entity_recurrence

    def test_prev_mode_one_hot(self):
        got = features_for("Nothing here.", prev_mode=DiscourseMode.QUOTE)
        assert got.to_dict()["prev=Quote"] == 1.0


class TestRuleBaseline:
    def label(self, text, **ctx):
        return rule_baseline(features_for(text, **ctx)).mode

    def test_fully_quoted_with_said(self):
        assert self.label('"We will fight on," she said.') == DiscourseMode.QUOTE

    def test_partial_quote_with_reporting_verb(self):
        text = 'The mayor called the plan "a disgrace for the whole city" on Monday.'
        got = features_for(text)
        assert 0 < got.quoted_token_fraction < 0.5
        assert self.label(text) == DiscourseMode.QUOTE

    def test_opinion_cue_first_person(self):
        assert self.label("I think this policy is disastrous.") == DiscourseMode.ARGUMENT

    def test_two_modals(self):
        assert self.label("Parliament would surely balk; it could refuse.") == (
            DiscourseMode.ARGUMENT
        )

    def test_background_needs_year_and_recurrence(self):
        text = "Back in 2015, Smith led the union."
        assert self.label(text, seen_entities=frozenset({"smith"})) == (
            DiscourseMode.BACKGROUND
        )
        assert self.label(text) != DiscourseMode.BACKGROUND

    def test_numeric_description(self):
        assert self.label("Turnout hit 61 percent across 9 districts, up 4 points.") == (
            DiscourseMode.DESCRIPTION
        )

    def test_sensory_description(self):
        assert self.label("Smoke drifted over the quiet, rain-soaked square.") == (
            DiscourseMode.DESCRIPTION
        )

    def test_default_narration(self):
        assert self.label("The committee met on the measure.") == DiscourseMode.NARRATION

    def test_rule_confidence_is_one(self):
        label = rule_baseline(features_for("The committee met."))
        assert label.confidence == 1.0
        assert label.source == "rule"

    def test_quote_soundness_fully_quoted(self):
        # 100% of word tokens inside balanced quotes -> Quote, reporting verb or not.
        assert self.label('"Every word here is quoted."') == DiscourseMode.QUOTE

    def test_determinism_independent_of_position(self):
        text = "The ministry published the figures."
        a = self.label(text, index=0, total=10)
        b = self.label(text, index=9, total=10)
        assert a == b


def toy_corpus():
    """Two classes split perfectly by the first_person feature."""
    rows = []
    for i in range(10):
        rows.append(
            CorpusSentence(
                text=f"I believe case {i} is wrong.",
                mode=DiscourseMode.ARGUMENT,
                doc=f"d{i % 2}",
                index=i,
            )
        )
        rows.append(
            CorpusSentence(
                text=f"The office filed report {i}.",
                mode=DiscourseMode.NARRATION,
                doc=f"d{i % 2}",
                index=i + 100,
            )
        )
    return rows


class TestTraining:
    def test_separable_corpus_reaches_full_accuracy(self):
        corpus = toy_corpus()
        model = train(corpus, epochs=10, seed=0)
        predictions = predict_corpus(model, corpus)
        gold = [cs.mode for cs in corpus]
        assert predictions == gold

    def test_same_seed_identical_weights(self):
        corpus = toy_corpus()
        a = train(corpus, epochs=5, seed=7)
        b = train(corpus, epochs=5, seed=7)
        assert a.weights == b.weights
        assert a.bias == b.bias

    def test_single_example_rejected(self):
        with pytest.raises(TrainError):
            train(toy_corpus()[:1])

    def test_single_label_rejected(self):
        rows = [cs for cs in toy_corpus() if cs.mode == DiscourseMode.NARRATION]
        with pytest.raises(TrainError):
            train(rows)

    def test_empty_corpus_rejected(self):
        with pytest.raises(TrainError):
            train([])

    def test_roundtrip_serialization(self):
        model = train(toy_corpus(), epochs=3, seed=1)
        clone = DiscourseModel.from_json(model.to_json())
        assert clone.weights == model.weights
        assert clone.bias == model.bias
        assert clone.feature_names == model.feature_names
        assert clone.metadata == model.metadata
        assert clone.metadata["seed"] == 1


class TestClassify:
    def zero_model(self):
        from sirenless.discourse import FEATURE_NAMES

        return DiscourseModel(
            feature_names=FEATURE_NAMES,
            weights={m: [0.0] * len(FEATURE_NAMES) for m in TIE_ORDER},
            bias={m: 0.0 for m in TIE_ORDER},
        )

    def test_zero_vector_tie_breaks_to_narration(self):
        label = classify(FeatureVector(), self.zero_model())
        assert label.mode == DiscourseMode.NARRATION
        assert label.confidence == pytest.approx(0.2)

    def test_aligned_vector_wins_with_confidence(self):
        from sirenless.discourse import FEATURE_NAMES

        weights = {m: [0.0] * len(FEATURE_NAMES) for m in TIE_ORDER}
        weights[DiscourseMode.QUOTE][FEATURE_NAMES.index("quoted_token_fraction")] = 5.0
        model = DiscourseModel(
            feature_names=FEATURE_NAMES,
            weights=weights,
            bias={m: 0.0 for m in TIE_ORDER},
        )
        label = classify(FeatureVector(quoted_token_fraction=1.0), model)
        assert label.mode == DiscourseMode.QUOTE
        assert label.confidence > 0.5

    def test_version_mismatch_raises(self):
        model = self.zero_model()
        model.feature_version = 99
        with pytest.raises(ModelError):
            classify(FeatureVector(), model)

    def test_softmax_confidences_sum_to_one(self):
        model = train(toy_corpus(), epochs=3, seed=0)
        feats = features_for("I think it is fine.")
        scores = model.score(feats)
        exp = {m: math.exp(s - max(scores.values())) for m, s in scores.items()}
        assert sum(exp.values()) > 0


class TestEvaluate:
    def test_perfect_predictions(self):
        corpus = toy_corpus()
        model = train(corpus, epochs=10, seed=0)
        report = evaluate(model, corpus)
        assert report.per_class[DiscourseMode.ARGUMENT]["f1"] == 1.0
        assert report.per_class[DiscourseMode.NARRATION]["f1"] == 1.0
        assert report.accuracy == 1.0

    def test_absent_classes_flagged_with_zero_f1(self):
        corpus = toy_corpus()
        model = train(corpus, epochs=10, seed=0)
        report = evaluate(model, corpus)
        assert DiscourseMode.QUOTE in report.absent_classes
        assert report.per_class[DiscourseMode.QUOTE]["f1"] == 0.0
        # Macro-F1 averages over all five classes, absent ones at zero.
        assert report.macro_f1 == pytest.approx(2 / 5)

    def test_empty_corpus_rejected(self):
        model = train(toy_corpus(), epochs=2, seed=0)
        with pytest.raises(EvalError):
            evaluate(model, [])

    def test_all_one_prediction_macro(self):
        # A model biased to Narration on a balanced 2-class corpus:
        # Narration F1 = 2*0.5*1/(1.5) = 2/3, the rest 0.
        corpus = toy_corpus()
        zero = {m: [0.0] * 17 for m in TIE_ORDER}
        model = DiscourseModel(
            feature_names=tuple(f"f{i}" for i in range(17)),
            weights=zero,
            bias={m: (1.0 if m == DiscourseMode.NARRATION else 0.0) for m in TIE_ORDER},
        )
        # Bypass feature extraction: score directly via evaluate is not
        # possible with fake names, so check the arithmetic directly.
        tp, fp, fn = 20, 20, 0
        precision = tp / (tp + fp)
        recall = 1.0
        f1 = 2 * precision * recall / (precision + recall)
        assert f1 == pytest.approx(2 / 3)


class TestDocumentLabeling:
    def test_every_sentence_gets_exactly_one_mode(self):
        text = (
            '"This is outrageous," the senator said. The bill passed the floor. '
            "I think the outcome is wrong. In 2019 the senator backed the same plan. "
            "Turnout reached 58 percent in 12 states."
        )
        doc = ingest(text)
        labels = label_document(doc)
        assert len(labels) == len(doc.sentences)
        counts = {m: 0 for m in DiscourseMode}
        for label in labels:
            counts[label.mode] += 1
        assert sum(counts.values()) == len(doc.sentences)

    def test_rule_labels_stable_across_runs(self):
        text = "The ministry said it would wait. Critics called the delay reckless."
        doc = ingest(text)
        assert [l.mode for l in label_document(doc)] == [
            l.mode for l in label_document(doc)
        ]


class TestHeldOutBeatsBaseline:
    def test_synthetic_model_beats_majority(self):
        rng = random.Random(5)
        train_rows, test_rows = synthetic_discourse_corpus(rng, n_docs=30, test_docs=10)
        model = train(train_rows, epochs=12, seed=3)
        report = evaluate(model, test_rows)
        gold = [cs.mode for cs in test_rows]
        majority = max(set(gold), key=gold.count)
        majority_rate = gold.count(majority) / len(gold)
        majority_f1 = []
        for mode in TIE_ORDER:
            tp = sum(1 for g in gold if g == mode and mode == majority)
            fn = sum(1 for g in gold if g == mode and mode != majority)
            fp = (len(gold) - gold.count(majority)) if mode == majority else 0
            p = tp / (tp + fp) if tp + fp else 0.0
            r = tp / (tp + fn) if tp + fn else 0.0
            majority_f1.append(2 * p * r / (p + r) if p + r else 0.0)
        majority_macro = sum(majority_f1) / len(majority_f1)
        assert report.macro_f1 > majority_macro
        assert report.accuracy >= majority_rate * 0.8


def synthetic_discourse_corpus(rng, n_docs, test_docs, sentences_per_doc=10):
    """Generate labeled documents with mode-typical sentence templates."""
    quotes = [
        '"We cannot accept this," {person} said.',
        '{person} told reporters, "the plan is finished."',
        '"The evidence speaks for itself," said {person}.',
    ]
    arguments = [
        "I believe the ruling is {adj}.",
        "Clearly the committee made a {adj} choice.",
        "The decision is, frankly, {adj}.",
    ]
    backgrounds = [
        "In {year}, {person} first proposed the measure.",
        "{person} joined the agency back in {year}.",
    ]
    descriptions = [
        "The hall held {n} seats across {n2} rows.",
        "Crowds filled the cold, grey square at dawn.",
        "Roughly {n} trucks lined {n2} blocked streets.",
    ]
    narrations = [
        "The council approved the measure.",
        "Delegates gathered for the vote.",
        "Officials presented the plan to the board.",
        "The agency released the schedule.",
    ]
    people = ["Alice Stone", "Ben Ruiz", "Cara Wells", "Dan Osei"]
    adjectives = ["reckless", "misguided", "brilliant", "foolish"]

    rows = []
    for d in range(n_docs + test_docs):
        person = rng.choice(people)
        surname = person.split()[1]
        # Introduce the character so Background recurrence can fire.
        rows.append(
            CorpusSentence(
                text=f"Reporters pressed {person} for details.",
                mode=DiscourseMode.NARRATION,
                doc=f"doc{d}",
                index=0,
            )
        )
        for i in range(1, sentences_per_doc):
            mode = rng.choice(list(DiscourseMode))
            if mode == DiscourseMode.QUOTE:
                text = rng.choice(quotes).format(person=surname)
            elif mode == DiscourseMode.ARGUMENT:
                text = rng.choice(arguments).format(adj=rng.choice(adjectives))
            elif mode == DiscourseMode.BACKGROUND:
                text = rng.choice(backgrounds).format(
                    person=surname, year=rng.randint(1990, 2019)
                )
            elif mode == DiscourseMode.DESCRIPTION:
                text = rng.choice(descriptions).format(
                    n=rng.randint(10, 90), n2=rng.randint(2, 9)
                )
            else:
                text = rng.choice(narrations)
            rows.append(
                CorpusSentence(text=text, mode=mode, doc=f"doc{d}", index=i)
            )
    split = n_docs * sentences_per_doc
    return rows[:split], rows[split:]
