/** DOM/SVG rendering. Scenes are drawn verbatim; all geometry and
 * every displayed number comes from the scene layer. */

import {
  CHART,
  buildExplorerScene,
  buildFilters,
  buildRadarScenes,
  buildReaderScene,
  buildSummaryHeader,
  buildWordCloud,
} from "./scene.js";
import type { ExplorerStore } from "./state.js";
import type { AnalysisResult } from "./types.js";
import { analysisProblems } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export function renderError(container: Element, message: string): void {
  clear(container);
  const panel = document.createElement("div");
  panel.className = "error-panel";
  panel.textContent = `Cannot render analysis: ${message}`;
  container.appendChild(panel);
}

export function renderAll(root: Document, store: ExplorerStore): void {
  const analysis = store.current.analysis;
  const explorer = root.getElementById("explorer")!;
  if (!analysis) {
    renderEmptyState(explorer);
    return;
  }
  const problems = analysisProblems(analysis);
  if (problems.length > 0) {
    renderError(explorer, problems.join("; "));
    return;
  }
  renderExplorer(explorer, analysis, store);
  renderFilters(root.getElementById("filters")!, analysis, store);
  renderSummary(root.getElementById("summary")!, analysis);
  renderRadars(root.getElementById("radars")!, analysis);
  renderPatterns(root.getElementById("patterns")!, analysis);
  renderReader(root.getElementById("reader")!, analysis, store);
  renderWordCloud(root.getElementById("wordcloud")!, analysis);
}

function renderEmptyState(container: Element): void {
  clear(container);
  const note = document.createElement("p");
  note.className = "empty-state";
  note.textContent = "Paste an article above and press Analyze.";
  container.appendChild(note);
}

function renderExplorer(
  container: Element,
  analysis: AnalysisResult,
  store: ExplorerStore,
): void {
  clear(container);
  const scene = buildExplorerScene(analysis, store.current);
  const svg = svgEl("svg", {
    viewBox: `0 0 ${scene.width} ${scene.height}`,
    class: "explorer-chart",
  });

  for (const x of scene.separators) {
    svg.appendChild(
      svgEl("line", {
        x1: x, y1: scene.topY, x2: x, y2: CHART.markerBase,
        class: "paragraph-separator",
      }),
    );
  }
  svg.appendChild(
    svgEl("line", {
      x1: CHART.padX, y1: scene.baselineY,
      x2: scene.width - CHART.padX, y2: scene.baselineY,
      class: "zero-baseline",
    }),
  );

  for (const segment of scene.segments) {
    const line = svgEl("line", {
      x1: segment.x1, y1: segment.y1, x2: segment.x2, y2: segment.y2,
      stroke: segment.color,
      "stroke-width": segment.selected ? 6 : 3,
      class: `curve-segment${segment.selected ? " selected" : ""}`,
      "data-sentence": segment.sentence,
    });
    line.addEventListener("click", () => store.selectSentence(segment.sentence));
    svg.appendChild(line);
  }

  for (const point of scene.points) {
    const dot = svgEl("circle", {
      cx: point.x, cy: point.y,
      r: point.selected ? 6 : point.extreme ? 5 : 3.5,
      fill: point.color,
      class: `curve-point${point.selected ? " selected" : ""}`,
      "data-sentence": point.sentence,
    });
    dot.addEventListener("click", () => store.selectSentence(point.sentence));
    svg.appendChild(dot);
  }

  for (const marker of scene.markers) {
    const glyph =
      marker.kind === "character"
        ? svgEl("circle", {
            cx: marker.x, cy: marker.y, r: CHART.markerSize,
            fill: marker.color,
            class: "marker marker-character",
            "data-sentence": marker.sentence,
          })
        : svgEl("polygon", {
            points: trianglePoints(marker.x, marker.y, CHART.markerSize + 1),
            fill: marker.color,
            class: "marker marker-keyword",
            "data-sentence": marker.sentence,
          });
    const tip = svgEl("title", {});
    tip.textContent = marker.label;
    glyph.appendChild(tip);
    glyph.addEventListener("click", () => store.selectSentence(marker.sentence));
    svg.appendChild(glyph);
  }

  container.appendChild(svg);
}

function trianglePoints(cx: number, cy: number, r: number): string {
  return [
    `${cx},${cy - r}`,
    `${cx - r},${cy + r}`,
    `${cx + r},${cy + r}`,
  ].join(" ");
}

function renderFilters(
  container: Element,
  analysis: AnalysisResult,
  store: ExplorerStore,
): void {
  clear(container);
  for (const entry of buildFilters(analysis, store.current)) {
    const chip = document.createElement("button");
    chip.className = `filter-chip${entry.active ? " active" : ""}`;
    chip.style.setProperty("--chip-color", entry.color);
    const glyph = entry.kind === "character" ? "●" : "▲";
    chip.textContent = `${glyph} ${entry.label}`;
    chip.addEventListener("click", () => {
      if (entry.kind === "character") store.toggleCharacter(entry.id);
      else store.toggleTopic(entry.id);
    });
    container.appendChild(chip);
  }
}

function renderSummary(container: Element, analysis: AnalysisResult): void {
  clear(container);
  for (const card of buildSummaryHeader(analysis)) {
    const div = document.createElement("div");
    div.className = "summary-card";
    div.title = card.tooltip;
    const attribute = document.createElement("span");
    attribute.className = "summary-attribute";
    attribute.textContent = card.attribute;
    const level = document.createElement("strong");
    level.className = "summary-level";
    level.textContent = card.level;
    const detail = document.createElement("span");
    detail.className = "summary-detail";
    detail.textContent = card.detail;
    div.append(attribute, level, detail);
    container.appendChild(div);
  }
}

function renderRadars(container: Element, analysis: AnalysisResult): void {
  clear(container);
  for (const radar of buildRadarScenes(analysis)) {
    const wrap = document.createElement("div");
    wrap.className = "radar";
    const caption = document.createElement("h3");
    caption.textContent = radar.title;
    const svg = svgEl("svg", {
      viewBox: `0 0 ${radar.size} ${radar.size}`,
      class: "radar-chart",
    });
    const center = radar.size / 2;
    for (let ring = 1; ring <= radar.rings; ring += 1) {
      svg.appendChild(
        svgEl("circle", {
          cx: center, cy: center,
          r: ((radar.size / 2 - 28) * ring) / radar.rings,
          class: "radar-ring",
        }),
      );
    }
    for (const axis of radar.axes) {
      svg.appendChild(
        svgEl("line", {
          x1: center, y1: center, x2: axis.x, y2: axis.y, class: "radar-axis",
        }),
      );
      const label = svgEl("text", {
        x: axis.x, y: axis.y, class: "radar-label",
        "text-anchor": axis.x < center - 4 ? "end" : axis.x > center + 4 ? "start" : "middle",
        dy: axis.y > center ? 12 : -4,
      });
      label.textContent = `${axis.label} (${formatAxisValue(axis.value)})`;
      svg.appendChild(label);
    }
    svg.appendChild(
      svgEl("polygon", {
        points: radar.polygon.map((p) => `${p.x},${p.y}`).join(" "),
        class: "radar-polygon",
      }),
    );
    wrap.append(caption, svg);
    container.appendChild(wrap);
  }
}

function formatAxisValue(value: number): string {
  return Number.isInteger(value) ? String(value) : value.toFixed(2);
}

function renderPatterns(container: Element, analysis: AnalysisResult): void {
  clear(container);
  if (analysis.patterns.length === 0) {
    const note = document.createElement("p");
    note.className = "no-findings";
    note.textContent = "No patterns flagged.";
    container.appendChild(note);
    return;
  }
  for (const finding of analysis.patterns) {
    const row = document.createElement("div");
    row.className = `finding finding-${finding.severity}`;
    row.textContent = `[${finding.severity}] ${finding.kind}: ${finding.detail}`;
    container.appendChild(row);
  }
}

function renderReader(
  container: Element,
  analysis: AnalysisResult,
  store: ExplorerStore,
): void {
  clear(container);
  const selected = store.current.selectedSentence;
  for (const paragraph of buildReaderScene(analysis, store.current)) {
    const p = document.createElement("p");
    for (const sentence of paragraph.sentences) {
      const span = document.createElement("span");
      span.className = `reader-sentence${sentence.selected ? " selected" : ""}`;
      span.dataset.sentence = String(sentence.index);
      span.style.setProperty("--mode-color", sentence.color);
      span.textContent = sentence.text + " ";
      span.addEventListener("click", () => store.selectSentence(sentence.index));
      p.appendChild(span);
    }
    container.appendChild(p);
  }
  if (selected !== null) {
    const target = container.querySelector(`[data-sentence="${selected}"]`);
    target?.scrollIntoView({ block: "nearest", behavior: "smooth" });
  }
}

function renderWordCloud(container: Element, analysis: AnalysisResult): void {
  clear(container);
  for (const word of buildWordCloud(analysis)) {
    const span = document.createElement("span");
    span.className = "cloud-word";
    span.style.fontSize = `${word.fontSize}px`;
    span.style.color = word.color;
    span.title = `${word.stem}: ${word.count}`;
    span.textContent = word.stem;
    container.appendChild(span);
  }
}
