import { readFileSync } from "node:fs";
import { beforeEach, describe, expect, it } from "vitest";

import {
  buildExplorerScene,
  buildFilters,
  buildRadarScenes,
  buildReaderScene,
  buildSummaryHeader,
  buildWordCloud,
} from "../src/scene.js";
import { ExplorerStore } from "../src/state.js";
import { DISCOURSE_COLORS } from "../src/theme.js";
import type { AnalysisResult } from "../src/types.js";
import { analysisProblems } from "../src/types.js";

const fixture: AnalysisResult = JSON.parse(
  readFileSync(new URL("fixtures/analysis.json", import.meta.url), "utf-8"),
);

function freshStore(): ExplorerStore {
  const store = new ExplorerStore();
  store.setAnalysis(fixture);
  return store;
}

describe("explorer scene", () => {
  let store: ExplorerStore;

  beforeEach(() => {
    store = freshStore();
  });

  it("renders exactly one curve point per sentence", () => {
    const scene = buildExplorerScene(fixture, store.current);
    expect(scene.points).toHaveLength(fixture.sentences.length);
    expect(scene.segments).toHaveLength(fixture.sentences.length);
  });

  it("colors every point by its sentence's discourse mode", () => {
    const scene = buildExplorerScene(fixture, store.current);
    for (const point of scene.points) {
      const sentence = fixture.sentences[point.sentence]!;
      expect(point.color).toBe(DISCOURSE_COLORS[sentence.mode]);
    }
  });

  it("maps polarity into the vertical band with a zero baseline", () => {
    const scene = buildExplorerScene(fixture, store.current);
    expect(scene.topY).toBeLessThan(scene.baselineY);
    expect(scene.bottomY).toBeGreaterThan(scene.baselineY);
    for (const point of scene.points) {
      const sentence = fixture.sentences[point.sentence]!;
      if (sentence.polarity > 0) expect(point.y).toBeLessThan(scene.baselineY);
      if (sentence.polarity < 0) expect(point.y).toBeGreaterThan(scene.baselineY);
      expect(point.y).toBeGreaterThanOrEqual(scene.topY);
      expect(point.y).toBeLessThanOrEqual(scene.bottomY);
    }
  });

  it("x positions advance with sentence order (horizontal layout)", () => {
    const scene = buildExplorerScene(fixture, store.current);
    const xs = scene.points.map((p) => p.x);
    for (let i = 1; i < xs.length; i += 1) {
      expect(xs[i]!).toBeGreaterThan(xs[i - 1]!);
    }
  });

  it("draws a separator at each paragraph boundary", () => {
    const scene = buildExplorerScene(fixture, store.current);
    const boundaries = fixture.sentences.filter(
      (s, i) => i > 0 && s.paragraph !== fixture.sentences[i - 1]!.paragraph,
    );
    expect(scene.separators).toHaveLength(boundaries.length);
  });

  it("renders every marker with its backend stack position", () => {
    const scene = buildExplorerScene(fixture, store.current);
    const expected = fixture.sentences.reduce(
      (total, s) => total + s.markers.length,
      0,
    );
    expect(scene.markers).toHaveLength(expected);
    for (const sentence of fixture.sentences) {
      const glyphs = scene.markers.filter((m) => m.sentence === sentence.index);
      for (const record of sentence.markers) {
        const glyph = glyphs.find(
          (g) => g.kind === record.kind && g.refId === record.ref_id,
        );
        expect(glyph).toBeDefined();
      }
      // Stack grows upward: higher stack_position, smaller y.
      const sorted = [...sentence.markers].sort(
        (a, b) => a.stack_position - b.stack_position,
      );
      const ys = sorted.map(
        (record) =>
          glyphs.find((g) => g.kind === record.kind && g.refId === record.ref_id)!.y,
      );
      for (let i = 1; i < ys.length; i += 1) {
        expect(ys[i]!).toBeLessThan(ys[i - 1]!);
      }
    }
  });
});

describe("character filter", () => {
  it("deselecting a character removes exactly its circles", () => {
    const store = freshStore();
    const character = fixture.characters[0]!;
    const before = buildExplorerScene(fixture, store.current);
    const target = before.markers.filter(
      (m) => m.kind === "character" && m.refId === character.id,
    );
    expect(target.length).toBe(character.mention_sentences.length);

    store.toggleCharacter(character.id);
    const after = buildExplorerScene(fixture, store.current);
    expect(after.markers).toHaveLength(before.markers.length - target.length);
    expect(
      after.markers.some(
        (m) => m.kind === "character" && m.refId === character.id,
      ),
    ).toBe(false);
  });

  it("hiding markers does not reflow the survivors or touch the curve", () => {
    const store = freshStore();
    const before = buildExplorerScene(fixture, store.current);
    store.toggleCharacter(fixture.characters[0]!.id);
    const after = buildExplorerScene(fixture, store.current);

    expect(after.points).toEqual(before.points);
    expect(after.segments).toEqual(before.segments);
    for (const glyph of after.markers) {
      const original = before.markers.find(
        (m) =>
          m.sentence === glyph.sentence &&
          m.kind === glyph.kind &&
          m.refId === glyph.refId,
      );
      expect(original).toBeDefined();
      expect(glyph.y).toBe(original!.y);
    }
  });

  it("filter chips reflect analysis ids and active state", () => {
    const store = freshStore();
    const entries = buildFilters(fixture, store.current);
    expect(entries.filter((e) => e.kind === "character")).toHaveLength(
      fixture.characters.length,
    );
    expect(entries.filter((e) => e.kind === "keyword")).toHaveLength(
      fixture.topics.length,
    );
    expect(entries.every((e) => e.active)).toBe(true);
    store.toggleTopic(fixture.topics[0]!.id);
    const after = buildFilters(fixture, store.current);
    const chip = after.find(
      (e) => e.kind === "keyword" && e.id === fixture.topics[0]!.id,
    );
    expect(chip!.active).toBe(false);
  });
});

describe("bidirectional selection", () => {
  it("clicking segment k highlights reader sentence k", () => {
    const store = freshStore();
    store.selectSentence(4);
    const scene = buildExplorerScene(fixture, store.current);
    expect(scene.segments[4]!.selected).toBe(true);
    const reader = buildReaderScene(fixture, store.current);
    const flat = reader.flatMap((p) => p.sentences);
    expect(flat.find((s) => s.index === 4)!.selected).toBe(true);
    expect(flat.filter((s) => s.selected)).toHaveLength(1);
  });

  it("clicking reader sentence k selects curve segment k (symmetry)", () => {
    const store = freshStore();
    store.selectSentence(2); // the reader click handler calls the same transition
    const scene = buildExplorerScene(fixture, store.current);
    expect(scene.points[2]!.selected).toBe(true);
  });

  it("clicking the selected sentence again deselects it", () => {
    const store = freshStore();
    store.selectSentence(3);
    store.selectSentence(3);
    expect(store.current.selectedSentence).toBeNull();
    const reader = buildReaderScene(fixture, store.current);
    expect(reader.flatMap((p) => p.sentences).some((s) => s.selected)).toBe(false);
  });

  it("ignores out-of-range indices", () => {
    const store = freshStore();
    store.selectSentence(fixture.sentences.length);
    store.selectSentence(-1);
    expect(store.current.selectedSentence).toBeNull();
  });
});

describe("dashboard", () => {
  it("summary header strings equal the JSON levels verbatim", () => {
    const cards = buildSummaryHeader(fixture);
    expect(cards.map((c) => [c.attribute, c.level])).toEqual([
      ["Writing Style", fixture.summary.writing_style.level],
      ["Sentiment", fixture.summary.sentiment],
      ["Readability", fixture.summary.readability],
      ["Reliability", fixture.summary.reliability.level],
    ]);
    for (const card of cards) expect(card.tooltip.length).toBeGreaterThan(20);
  });

  it("radar axes carry the JSON numbers untouched", () => {
    const [sentimentRadar, discourseRadar] = buildRadarScenes(fixture);
    const sentimentValues = sentimentRadar.axes.map((a) => a.value);
    expect(sentimentValues.reduce((a, b) => a + b, 0)).toBe(
      fixture.sentences.length,
    );
    expect(Object.values(fixture.stats.radar.sentiment_axes).sort()).toEqual(
      [...sentimentValues].sort(),
    );
    const shareSum = discourseRadar.axes
      .map((a) => a.value)
      .reduce((a, b) => a + b, 0);
    expect(shareSum).toBeCloseTo(1.0, 9);
    expect(sentimentRadar.axes).toHaveLength(5);
    expect(discourseRadar.axes).toHaveLength(5);
  });

  it("radar polygons stay inside the chart", () => {
    for (const radar of buildRadarScenes(fixture)) {
      for (const vertex of radar.polygon) {
        expect(vertex.x).toBeGreaterThanOrEqual(0);
        expect(vertex.x).toBeLessThanOrEqual(radar.size);
        expect(vertex.y).toBeGreaterThanOrEqual(0);
        expect(vertex.y).toBeLessThanOrEqual(radar.size);
      }
    }
  });

  it("word cloud is capped at 50 and sized monotonically by count", () => {
    const cloud = buildWordCloud(fixture);
    expect(cloud.length).toBeLessThanOrEqual(50);
    expect(cloud.length).toBe(fixture.wordcloud.length);
    for (let i = 1; i < cloud.length; i += 1) {
      if (cloud[i]!.count < cloud[i - 1]!.count) {
        expect(cloud[i]!.fontSize).toBeLessThan(cloud[i - 1]!.fontSize);
      }
    }
  });

  it("word cloud build is deterministic", () => {
    expect(buildWordCloud(fixture)).toEqual(buildWordCloud(fixture));
  });
});

describe("robustness", () => {
  it("flags malformed analyses instead of crashing", () => {
    expect(analysisProblems(null).length).toBeGreaterThan(0);
    expect(analysisProblems({}).length).toBeGreaterThan(0);
    const broken = JSON.parse(JSON.stringify(fixture));
    broken.sentences[0].polarity = "high";
    expect(analysisProblems(broken)).toContain("sentence 0 malformed");
    expect(analysisProblems(fixture)).toEqual([]);
  });

  it("empty analyses produce an empty scene, not an error", () => {
    const empty: AnalysisResult = {
      ...fixture,
      sentences: [],
      characters: [],
      topics: [],
      wordcloud: [],
    };
    const store = new ExplorerStore();
    store.setAnalysis(empty);
    const scene = buildExplorerScene(empty, store.current);
    expect(scene.points).toHaveLength(0);
    expect(scene.markers).toHaveLength(0);
    expect(scene.separators).toHaveLength(0);
  });

  it("drops stale responses for an id the user has left", () => {
    const store = new ExplorerStore();
    store.setAnalysis(fixture);
    store.beginLoad("newer-id");
    const stale = { ...fixture, id: "older-id" };
    expect(store.setAnalysis(stale)).toBe(false);
    expect(store.current.analysis!.id).toBe(fixture.id);
  });
});
