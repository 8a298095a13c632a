/** View state and its transitions. The store holds which analysis is
 * active, which characters/topics are visible, and the selected
 * sentence; every mutation notifies subscribers. */

import type { AnalysisResult } from "./types.js";

export interface ViewState {
  activeId: string | null;
  analysis: AnalysisResult | null;
  characterFilter: Set<number>; // visible character ids
  topicFilter: Set<number>; // visible topic ids
  selectedSentence: number | null;
  hoveredMarker: { kind: "character" | "keyword"; refId: number } | null;
}

type Listener = (state: ViewState) => void;

export class ExplorerStore {
  private state: ViewState = {
    activeId: null,
    analysis: null,
    characterFilter: new Set(),
    topicFilter: new Set(),
    selectedSentence: null,
    hoveredMarker: null,
  };

  private listeners: Listener[] = [];

  get current(): ViewState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.state);
  }

  /** Mark an id as loading; responses for other ids become stale. */
  beginLoad(id: string): void {
    this.state = { ...this.state, activeId: id };
    this.emit();
  }

  /** Install a fetched analysis; stale responses (wrong id) are dropped. */
  setAnalysis(analysis: AnalysisResult): boolean {
    if (this.state.activeId !== null && analysis.id !== this.state.activeId) {
      return false;
    }
    this.state = {
      ...this.state,
      activeId: analysis.id,
      analysis,
      characterFilter: new Set(analysis.characters.map((c) => c.id)),
      topicFilter: new Set(analysis.topics.map((t) => t.id)),
      selectedSentence: null,
      hoveredMarker: null,
    };
    this.emit();
    return true;
  }

  /** Click on curve segment k or reader sentence k: select, or toggle
   * off when it is already selected. Invalid indices are ignored. */
  selectSentence(index: number): void {
    const analysis = this.state.analysis;
    if (!analysis || index < 0 || index >= analysis.sentences.length) return;
    const selected = this.state.selectedSentence === index ? null : index;
    this.state = { ...this.state, selectedSentence: selected };
    this.emit();
  }

  toggleCharacter(id: number): void {
    if (!this.state.analysis?.characters.some((c) => c.id === id)) return;
    const filter = new Set(this.state.characterFilter);
    if (filter.has(id)) filter.delete(id);
    else filter.add(id);
    this.state = { ...this.state, characterFilter: filter };
    this.emit();
  }

  toggleTopic(id: number): void {
    if (!this.state.analysis?.topics.some((t) => t.id === id)) return;
    const filter = new Set(this.state.topicFilter);
    if (filter.has(id)) filter.delete(id);
    else filter.add(id);
    this.state = { ...this.state, topicFilter: filter };
    this.emit();
  }

  setHoveredMarker(marker: ViewState["hoveredMarker"]): void {
    this.state = { ...this.state, hoveredMarker: marker };
    this.emit();
  }
}
