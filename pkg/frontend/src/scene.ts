/** Pure scene builders: analysis JSON + view state in, drawable scene
 * descriptions out. No DOM access, so every visual decision is
 * testable. The renderer translates scenes into SVG/HTML verbatim. */

import {
  DISCOURSE_COLORS,
  DISCOURSE_ORDER,
  SENTIMENT_AXIS_LABELS,
  SUMMARY_TOOLTIPS,
  characterColor,
  topicColor,
} from "./theme.js";
import type { AnalysisResult, DiscourseMode } from "./types.js";
import type { ViewState } from "./state.js";

export interface CurvePoint {
  sentence: number;
  x: number;
  y: number;
  color: string;
  mode: DiscourseMode;
  extreme: boolean;
  selected: boolean;
}

export interface CurveSegment {
  sentence: number; // clicking this segment selects that sentence
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  color: string;
  selected: boolean;
}

export interface MarkerGlyph {
  sentence: number;
  kind: "character" | "keyword";
  refId: number;
  x: number;
  y: number; // from stack_position, never reflowed by filters
  color: string;
  label: string;
}

export interface ExplorerScene {
  width: number;
  height: number;
  baselineY: number; // polarity zero
  topY: number; // polarity +1
  bottomY: number; // polarity -1
  points: CurvePoint[];
  segments: CurveSegment[];
  markers: MarkerGlyph[];
  separators: number[]; // x positions of paragraph boundaries
}

export const CHART = {
  width: 960,
  height: 300,
  padX: 24,
  curveTop: 16,
  curveBottom: 196, // polarity band: curveTop..curveBottom
  markerBase: 288, // stacks grow upward from here
  markerStep: 14,
  markerSize: 5,
};

function xAt(index: number, count: number): number {
  if (count <= 1) return CHART.width / 2;
  const span = CHART.width - 2 * CHART.padX;
  return CHART.padX + (index * span) / (count - 1);
}

function yAt(polarity: number): number {
  const mid = (CHART.curveTop + CHART.curveBottom) / 2;
  const half = (CHART.curveBottom - CHART.curveTop) / 2;
  return mid - polarity * half;
}

/** The article explorer: horizontal sentence axis, polarity curve with
 * one point and one clickable segment per sentence (colored by
 * discourse mode), stacked metadata markers, paragraph separators. */
export function buildExplorerScene(
  analysis: AnalysisResult,
  view: ViewState,
): ExplorerScene {
  const sentences = analysis.sentences;
  const n = sentences.length;

  const points: CurvePoint[] = sentences.map((s) => ({
    sentence: s.index,
    x: xAt(s.index, n),
    y: yAt(s.polarity),
    color: DISCOURSE_COLORS[s.mode],
    mode: s.mode,
    extreme: s.extreme,
    selected: view.selectedSentence === s.index,
  }));

  // Segment k covers the polyline around point k (midpoint to
  // midpoint), so the whole curve is clickable and each sentence owns
  // exactly one segment.
  const segments: CurveSegment[] = points.map((p, i) => {
    const prev = points[i - 1];
    const next = points[i + 1];
    const x1 = prev ? (prev.x + p.x) / 2 : p.x;
    const y1 = prev ? (prev.y + p.y) / 2 : p.y;
    const x2 = next ? (next.x + p.x) / 2 : p.x;
    const y2 = next ? (next.y + p.y) / 2 : p.y;
    return {
      sentence: p.sentence,
      x1,
      y1,
      x2,
      y2,
      color: p.color,
      selected: p.selected,
    };
  });

  // Markers keep the stack slots assigned by the backend; filtering
  // hides glyphs without reflowing the survivors.
  const markers: MarkerGlyph[] = [];
  const characterNames = new Map(
    analysis.characters.map((c) => [c.id, c.canonical]),
  );
  const topicNames = new Map(
    analysis.topics.map((t) => [t.id, t.keywords.map(([s]) => s).join(", ")]),
  );
  for (const sentence of sentences) {
    for (const marker of sentence.markers) {
      const visible =
        marker.kind === "character"
          ? view.characterFilter.has(marker.ref_id)
          : view.topicFilter.has(marker.ref_id);
      if (!visible) continue;
      markers.push({
        sentence: sentence.index,
        kind: marker.kind,
        refId: marker.ref_id,
        x: xAt(sentence.index, n),
        y: CHART.markerBase - marker.stack_position * CHART.markerStep,
        color:
          marker.kind === "character"
            ? characterColor(marker.ref_id)
            : topicColor(marker.ref_id),
        label:
          marker.kind === "character"
            ? (characterNames.get(marker.ref_id) ?? `character ${marker.ref_id}`)
            : `topic ${marker.ref_id}: ${topicNames.get(marker.ref_id) ?? ""}`,
      });
    }
  }

  // A separator sits before each sentence that starts a new paragraph.
  const separators: number[] = [];
  for (let i = 1; i < n; i += 1) {
    const here = sentences[i]!;
    const before = sentences[i - 1]!;
    if (here.paragraph !== before.paragraph) {
      separators.push((xAt(i - 1, n) + xAt(i, n)) / 2);
    }
  }

  return {
    width: CHART.width,
    height: CHART.height,
    baselineY: yAt(0),
    topY: yAt(1),
    bottomY: yAt(-1),
    points,
    segments,
    markers,
    separators,
  };
}

export interface RadarScene {
  title: string;
  axes: { label: string; value: number; x: number; y: number }[];
  polygon: { x: number; y: number }[];
  rings: number; // concentric guide rings
  size: number;
}

const RADAR_SIZE = 220;
const RADAR_RINGS = 4;

function radarScene(
  title: string,
  entries: { label: string; value: number }[],
): RadarScene {
  const center = RADAR_SIZE / 2;
  const radius = RADAR_SIZE / 2 - 28;
  const peak = Math.max(1e-9, ...entries.map((e) => e.value));
  const axes = entries.map((entry, i) => {
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / entries.length;
    return {
      label: entry.label,
      value: entry.value,
      x: center + radius * Math.cos(angle),
      y: center + radius * Math.sin(angle),
    };
  });
  const polygon = entries.map((entry, i) => {
    const angle = -Math.PI / 2 + (2 * Math.PI * i) / entries.length;
    const r = (entry.value / peak) * radius;
    return {
      x: center + r * Math.cos(angle),
      y: center + r * Math.sin(angle),
    };
  });
  return { title, axes, polygon, rings: RADAR_RINGS, size: RADAR_SIZE };
}

/** The two radar charts: five sentiment bins, five discourse shares.
 * Axis values are the JSON numbers; only the polygon is scaled. */
export function buildRadarScenes(analysis: AnalysisResult): [RadarScene, RadarScene] {
  const sentimentEntries = Object.entries(analysis.stats.radar.sentiment_axes).map(
    ([key, value]) => ({ label: SENTIMENT_AXIS_LABELS[key] ?? key, value }),
  );
  const discourseEntries = DISCOURSE_ORDER.map((mode) => ({
    label: mode,
    value: analysis.stats.radar.discourse_axes[mode] ?? 0,
  }));
  return [
    radarScene("Sentiment", sentimentEntries),
    radarScene("Discourse modes", discourseEntries),
  ];
}

export interface SummaryCard {
  attribute: string;
  level: string; // verbatim from the JSON; never recomputed
  detail: string;
  tooltip: string;
}

export function buildSummaryHeader(analysis: AnalysisResult): SummaryCard[] {
  const s = analysis.summary;
  return [
    {
      attribute: "Writing Style",
      level: s.writing_style.level,
      detail: `grade ${s.writing_style.grade.toFixed(3)}`,
      tooltip: SUMMARY_TOOLTIPS.writing_style,
    },
    {
      attribute: "Sentiment",
      level: s.sentiment,
      detail: `article polarity ${analysis.stats.article_polarity.toFixed(3)}`,
      tooltip: SUMMARY_TOOLTIPS.sentiment,
    },
    {
      attribute: "Readability",
      level: s.readability,
      detail: `reading ease ${analysis.stats.flesch_score.toFixed(1)}`,
      tooltip: SUMMARY_TOOLTIPS.readability,
    },
    {
      attribute: "Reliability",
      level: s.reliability.level,
      detail: `grade ${s.reliability.grade.toFixed(1)}`,
      tooltip: SUMMARY_TOOLTIPS.reliability,
    },
  ];
}

export interface CloudWord {
  stem: string;
  count: number;
  fontSize: number;
  color: string;
}

const CLOUD_MIN_PX = 12;
const CLOUD_MAX_PX = 34;

/** Deterministic: identical analysis JSON yields an identical cloud.
 * Words flow in the JSON's order (count desc, stem asc); size scales
 * with count; colors cycle a fixed palette seeded by rank. */
export function buildWordCloud(analysis: AnalysisResult): CloudWord[] {
  const words = analysis.wordcloud;
  const peak = Math.max(1, ...words.map(([, count]) => count));
  return words.map(([stem, count], rank) => ({
    stem,
    count,
    fontSize:
      CLOUD_MIN_PX + ((CLOUD_MAX_PX - CLOUD_MIN_PX) * count) / peak,
    color: characterColor(rank),
  }));
}

export interface ReaderSentence {
  index: number;
  text: string;
  mode: DiscourseMode;
  color: string;
  selected: boolean;
  extreme: boolean;
}

export interface ReaderParagraph {
  sentences: ReaderSentence[];
}

/** The reader view mirrors the document structure; the selected
 * sentence (from either side of the bidirectional link) is flagged. */
export function buildReaderScene(
  analysis: AnalysisResult,
  view: ViewState,
): ReaderParagraph[] {
  const paragraphs: ReaderParagraph[] = [];
  for (const sentence of analysis.sentences) {
    while (paragraphs.length <= sentence.paragraph) {
      paragraphs.push({ sentences: [] });
    }
    paragraphs[sentence.paragraph]!.sentences.push({
      index: sentence.index,
      text: sentence.text,
      mode: sentence.mode,
      color: DISCOURSE_COLORS[sentence.mode],
      selected: view.selectedSentence === sentence.index,
      extreme: sentence.extreme,
    });
  }
  return paragraphs;
}

export interface FilterEntry {
  id: number;
  label: string;
  color: string;
  active: boolean;
  kind: "character" | "keyword";
}

export function buildFilters(analysis: AnalysisResult, view: ViewState): FilterEntry[] {
  const characters: FilterEntry[] = analysis.characters.map((c) => ({
    id: c.id,
    label: c.canonical,
    color: characterColor(c.id),
    active: view.characterFilter.has(c.id),
    kind: "character",
  }));
  const topics: FilterEntry[] = analysis.topics.map((t) => ({
    id: t.id,
    label: t.keywords
      .slice(0, 3)
      .map(([stem]) => stem)
      .join(" · "),
    color: topicColor(t.id),
    active: view.topicFilter.has(t.id),
    kind: "keyword",
  }));
  return [...characters, ...topics];
}
