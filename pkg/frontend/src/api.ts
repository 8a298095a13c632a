/** Thin client for the analysis service HTTP API. */

import type { AnalysisListEntry, AnalysisResult } from "./types.js";

export async function postArticle(
  text: string,
  title?: string,
): Promise<string> {
  const response = await fetch("/api/analyze", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(title ? { text, title } : { text }),
  });
  const payload = await response.json();
  if (!response.ok) {
    throw new Error(payload.message ?? payload.error ?? `HTTP ${response.status}`);
  }
  return payload.id as string;
}

export async function fetchAnalysis(id: string): Promise<AnalysisResult> {
  const response = await fetch(`/api/analyses/${id}`);
  if (!response.ok) {
    throw new Error(`analysis ${id} not found (HTTP ${response.status})`);
  }
  return (await response.json()) as AnalysisResult;
}

export async function fetchListing(): Promise<AnalysisListEntry[]> {
  const response = await fetch("/api/analyses");
  if (!response.ok) {
    throw new Error(`listing failed (HTTP ${response.status})`);
  }
  const payload = await response.json();
  return payload.analyses as AnalysisListEntry[];
}
