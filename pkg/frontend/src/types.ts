/** Shapes of the analysis JSON served by the backend. The UI never
 * recomputes analytics: every displayed number comes from these fields. */

export type DiscourseMode =
  | "Narration"
  | "Argument"
  | "Quote"
  | "Description"
  | "Background";

export interface MarkerRecord {
  kind: "character" | "keyword";
  ref_id: number;
  stack_position: number;
}

export interface SentenceRecord {
  index: number;
  paragraph: number;
  span: [number, number];
  text: string;
  polarity: number;
  subjectivity: number;
  extreme: boolean;
  mode: DiscourseMode;
  confidence: number;
  markers: MarkerRecord[];
}

export interface CharacterRecord {
  id: number;
  canonical: string;
  aliases: string[];
  mention_sentences: number[];
}

export interface TopicRecord {
  id: number;
  weight: number;
  keywords: [string, number][];
}

export interface PatternFinding {
  kind: string;
  severity: "info" | "warning" | "alert";
  evidence: number[];
  detail: string;
}

export interface AnalysisResult {
  schema_version: number;
  id: string;
  title: string | null;
  counts: {
    paragraphs: number;
    sentences: number;
    words: number;
    syllables: number;
  };
  sentences: SentenceRecord[];
  characters: CharacterRecord[];
  topics: TopicRecord[];
  stats: {
    article_polarity: number;
    article_subjectivity: number;
    flesch_score: number;
    histogram: Record<DiscourseMode, number>;
    radar: {
      sentiment_axes: Record<string, number>;
      discourse_axes: Record<DiscourseMode, number>;
    };
  };
  summary: {
    writing_style: { level: string; grade: number };
    sentiment: string;
    readability: string;
    reliability: { level: string; grade: number };
  };
  patterns: PatternFinding[];
  wordcloud: [string, number][];
  config: Record<string, unknown>;
}

export interface AnalysisListEntry {
  id: string;
  title: string | null;
  created: number;
}

/** Minimal structural check before rendering; returns problems found. */
export function analysisProblems(value: unknown): string[] {
  const problems: string[] = [];
  const a = value as Partial<AnalysisResult> | null;
  if (!a || typeof a !== "object") return ["analysis is not an object"];
  if (!Array.isArray(a.sentences)) problems.push("sentences missing");
  if (!Array.isArray(a.characters)) problems.push("characters missing");
  if (!Array.isArray(a.topics)) problems.push("topics missing");
  if (!a.stats || typeof a.stats !== "object") problems.push("stats missing");
  if (!a.summary || typeof a.summary !== "object") problems.push("summary missing");
  if (!Array.isArray(a.wordcloud)) problems.push("wordcloud missing");
  if (Array.isArray(a.sentences)) {
    a.sentences.forEach((s, i) => {
      if (typeof s?.polarity !== "number" || typeof s?.mode !== "string") {
        problems.push(`sentence ${i} malformed`);
      }
    });
  }
  return problems;
}
