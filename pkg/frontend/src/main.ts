/** App wiring: paste box posts to the service, picker loads stored
 * analyses, and every state change re-renders from scenes. */

import { fetchAnalysis, fetchListing, postArticle } from "./api.js";
import { renderAll, renderError } from "./render.js";
import { ExplorerStore } from "./state.js";

const store = new ExplorerStore();

async function loadAnalysis(id: string): Promise<void> {
  store.beginLoad(id);
  try {
    const analysis = await fetchAnalysis(id);
    // setAnalysis drops stale responses when the user has moved on.
    store.setAnalysis(analysis);
  } catch (error) {
    renderError(
      document.getElementById("explorer")!,
      error instanceof Error ? error.message : String(error),
    );
  }
}

async function refreshListing(): Promise<void> {
  const picker = document.getElementById("picker") as HTMLSelectElement;
  const entries = await fetchListing();
  while (picker.options.length > 1) picker.remove(1);
  for (const entry of entries) {
    const option = document.createElement("option");
    option.value = entry.id;
    option.textContent = entry.title ?? entry.id.slice(0, 12);
    picker.appendChild(option);
  }
}

function wireControls(): void {
  const form = document.getElementById("submit-form") as HTMLFormElement;
  const textarea = document.getElementById("article-text") as HTMLTextAreaElement;
  const titleInput = document.getElementById("article-title") as HTMLInputElement;
  const picker = document.getElementById("picker") as HTMLSelectElement;
  const status = document.getElementById("status")!;

  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    const text = textarea.value;
    if (!text.trim()) {
      status.textContent = "Paste some article text first.";
      return;
    }
    status.textContent = "Analyzing…";
    try {
      const id = await postArticle(text, titleInput.value || undefined);
      status.textContent = "";
      await refreshListing();
      picker.value = id;
      await loadAnalysis(id);
    } catch (error) {
      status.textContent = error instanceof Error ? error.message : String(error);
    }
  });

  picker.addEventListener("change", () => {
    if (picker.value) void loadAnalysis(picker.value);
  });
}

store.subscribe(() => renderAll(document, store));

wireControls();
renderAll(document, store);
void refreshListing().catch(() => {
  document.getElementById("status")!.textContent =
    "Analysis service unreachable; is `sirenless serve` running?";
});
