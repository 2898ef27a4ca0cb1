import { wireFloat } from "../format";
import type { RecommendResponse } from "../types";

const TRANSITION_FILL = "#b9b2a6";

export interface BarsPanel {
  root: HTMLElement;
  render(
    response: RecommendResponse | null,
    colors: Map<number, string>,
    selected: Set<number>,
  ): void;
}

/**
 * One horizontal stacked bar per returned route. Bar length tracks the
 * route's display total; inside the bar, POI and transition segments
 * appear strictly in visiting order, sized by their display scores.
 * Checking a row overlays that route's polyline on the map.
 */
export function createBarsPanel(onToggle: (index: number, on: boolean) => void): BarsPanel {
  const root = document.createElement("section");
  root.id = "bars-panel";
  root.className = "panel";

  function render(
    response: RecommendResponse | null,
    colors: Map<number, string>,
    selected: Set<number>,
  ): void {
    root.replaceChildren();
    const heading = document.createElement("h2");
    heading.textContent = "Route scores";
    root.append(heading);
    if (!response) {
      const hint = document.createElement("p");
      hint.className = "hint";
      hint.textContent = "run a query to see ranked routes";
      root.append(hint);
      return;
    }

    response.routes.forEach((route, index) => {
      const row = document.createElement("div");
      row.className = "bar-row";
      row.dataset.route = String(index);

      const pick = document.createElement("input");
      pick.type = "checkbox";
      pick.className = "row-select";
      pick.checked = selected.has(index);
      pick.addEventListener("change", () => onToggle(index, pick.checked));
      row.append(pick);

      const total = document.createElement("span");
      total.className = "bar-total";
      total.textContent = wireFloat(route.display.total);
      total.title = `display total of route ${index + 1}`;
      row.append(total);

      const track = document.createElement("div");
      track.className = "bar-track";
      // Display totals live in [10, 100], so the percentage doubles as the
      // bar length: the top route spans the full track.
      track.style.width = `${route.display.total}%`;

      const stops = route.pois.length;
      for (let j = 0; j < stops; j++) {
        const poi = route.pois[j];
        const score = route.display.poi_scores[j];
        const seg = document.createElement("span");
        seg.className = "bar-seg poi-seg";
        seg.dataset.kind = "poi";
        seg.dataset.poi = String(poi.id);
        seg.style.backgroundColor = colors.get(poi.id) ?? "#999";
        // Scores can be negative (they share the route-total scaling);
        // a non-positive segment keeps its place in the row at zero width.
        seg.style.flexGrow = String(Math.max(score, 0));
        seg.title = `${poi.name}: ${wireFloat(score)}`;
        track.append(seg);
        if (j < stops - 1) {
          const tScore = route.display.transition_scores[j];
          const tSeg = document.createElement("span");
          tSeg.className = "bar-seg transition-seg";
          tSeg.dataset.kind = "transition";
          tSeg.style.backgroundColor = TRANSITION_FILL;
          tSeg.style.flexGrow = String(Math.max(tScore, 0));
          tSeg.title = `${poi.name} to ${route.pois[j + 1].name}: ${wireFloat(tScore)}`;
          track.append(tSeg);
        }
      }
      row.append(track);
      root.append(row);
    });
  }

  return { root, render };
}
