import type { PoiSummary } from "../types";

export interface QueryPanel {
  root: HTMLElement;
  render(
    pois: PoiSummary[],
    startPoi: number | null,
    length: number,
    mode: string,
    k: number,
    error: string | null,
  ): void;
}

const MODES = ["walking", "driving"];
const K_CHOICES = [1, 3, 5, 10];

export function createQueryPanel(handlers: {
  onLength(value: number): void;
  onMode(value: string): void;
  onK(value: number): void;
  onSubmit(): void;
}): QueryPanel {
  const root = document.createElement("section");
  root.id = "query-panel";
  root.className = "panel";
  root.innerHTML = `
    <h2>Trip query</h2>
    <p class="start-row">start: <span id="start-poi-label">click a POI icon on the map</span></p>
    <label class="length-row">stops
      <input id="length-input" type="range" min="2" max="2" step="1" />
      <output id="length-output"></output>
    </label>
    <label>mode <select id="mode-select"></select></label>
    <label>routes <select id="k-select"></select></label>
    <button id="submit-btn" disabled>Recommend</button>
    <div id="query-error" role="alert"></div>
  `;

  const startLabel = root.querySelector<HTMLSpanElement>("#start-poi-label")!;
  const lengthInput = root.querySelector<HTMLInputElement>("#length-input")!;
  const lengthOutput = root.querySelector<HTMLOutputElement>("#length-output")!;
  const modeSelect = root.querySelector<HTMLSelectElement>("#mode-select")!;
  const kSelect = root.querySelector<HTMLSelectElement>("#k-select")!;
  const submitBtn = root.querySelector<HTMLButtonElement>("#submit-btn")!;
  const errorBox = root.querySelector<HTMLDivElement>("#query-error")!;

  for (const m of MODES) {
    const opt = document.createElement("option");
    opt.value = m;
    opt.textContent = m;
    modeSelect.append(opt);
  }
  for (const k of K_CHOICES) {
    const opt = document.createElement("option");
    opt.value = String(k);
    opt.textContent = String(k);
    kSelect.append(opt);
  }

  lengthInput.addEventListener("input", () => {
    handlers.onLength(Number(lengthInput.value));
  });
  modeSelect.addEventListener("change", () => handlers.onMode(modeSelect.value));
  kSelect.addEventListener("change", () => handlers.onK(Number(kSelect.value)));
  submitBtn.addEventListener("click", () => handlers.onSubmit());

  function render(
    pois: PoiSummary[],
    startPoi: number | null,
    length: number,
    mode: string,
    k: number,
    error: string | null,
  ): void {
    // Trip length is bounded by the number of known POIs (routes are
    // repeat free, so a longer trip could not exist).
    lengthInput.min = "2";
    lengthInput.max = String(Math.max(2, pois.length));
    lengthInput.value = String(length);
    lengthOutput.textContent = String(length);
    modeSelect.value = mode;
    kSelect.value = String(k);
    if (startPoi === null) {
      startLabel.textContent = "click a POI icon on the map";
      submitBtn.disabled = true;
    } else {
      const poi = pois.find((p) => p.id === startPoi);
      startLabel.textContent = poi ? `${poi.name} (${poi.category})` : String(startPoi);
      submitBtn.disabled = false;
    }
    errorBox.textContent = error ?? "";
    errorBox.classList.toggle("visible", error !== null);
  }

  return { root, render };
}
