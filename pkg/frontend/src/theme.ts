/** Exact color values for the whole UI live here. */

import type { DiscourseMode } from "./types.js";

/** Five distinct hues for the discourse modes: narration stays muted
 * so the other four stand out; argument is deliberately alarming. */
export const DISCOURSE_COLORS: Record<DiscourseMode, string> = {
  Narration: "#d9c5a0", // desaturated tan
  Argument: "#d64545", // red
  Quote: "#5ab4e5", // sky blue
  Description: "#58a869", // green
  Background: "#8e6bbf", // purple
};

export const DISCOURSE_ORDER: DiscourseMode[] = [
  "Narration",
  "Argument",
  "Quote",
  "Description",
  "Background",
];

/** Rotating hue palette for character circles, keyed by character id. */
export const CHARACTER_PALETTE = [
  "#e6794a",
  "#4a90e2",
  "#50b88a",
  "#c95fa0",
  "#b0a035",
  "#7a6ff0",
  "#3fb5ad",
  "#e05c5c",
];

/** Rotating hue palette for topic keyword triangles, keyed by topic id. */
export const TOPIC_PALETTE = [
  "#946bde",
  "#de9a3c",
  "#429e9d",
  "#cb5b8a",
  "#6a9a3f",
  "#5577d9",
];

export const SENTIMENT_AXIS_LABELS: Record<string, string> = {
  strong_negative: "strong neg",
  negative: "negative",
  neutral: "neutral",
  positive: "positive",
  strong_positive: "strong pos",
};

export function characterColor(id: number): string {
  return CHARACTER_PALETTE[id % CHARACTER_PALETTE.length]!;
}

export function topicColor(id: number): string {
  return TOPIC_PALETTE[id % TOPIC_PALETTE.length]!;
}

/** Plain-language notes shown as tooltips on the summary header. */
export const SUMMARY_TOOLTIPS = {
  writing_style:
    "How argumentative the writing is: argument and quote sentences add to " +
    "the grade, description and background subtract, all relative to plain " +
    "narration. Low means rigorous, matter-of-fact writing.",
  sentiment:
    "How strongly the article leans positive or negative overall, using the " +
    "size of the average sentence sentiment. Calm articles stay near zero.",
  readability:
    "The reading-ease score built from words per sentence and syllables per " +
    "word. Higher scores mean shorter, plainer sentences that are easy to read.",
  reliability:
    "Starts at 100 and loses a point for every percent of overall sentiment " +
    "lean and opinionated wording. Emotional, subjective articles score low.",
} as const;
