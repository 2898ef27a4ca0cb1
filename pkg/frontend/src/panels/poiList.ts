import { wireFloat } from "../format";
import type { RouteEntry } from "../types";

export interface PoiListPanel {
  root: HTMLElement;
  render(route: RouteEntry | null, colors: Map<number, string>, checked: Set<number>): void;
}

/**
 * Ordered stop list for the most recently chosen route, with the route's
 * travel time and total distance shown verbatim from the response. The
 * checkbox on each row drives the radar chart's POI selection.
 */
export function createPoiListPanel(
  onToggleChecked: (poiId: number, on: boolean) => void,
): PoiListPanel {
  const root = document.createElement("section");
  root.id = "list-panel";
  root.className = "panel";

  function render(
    route: RouteEntry | null,
    colors: Map<number, string>,
    checked: Set<number>,
  ): void {
    root.replaceChildren();
    const heading = document.createElement("h2");
    heading.textContent = "Stops";
    root.append(heading);
    if (!route) {
      const hint = document.createElement("p");
      hint.className = "hint";
      hint.textContent = "select a route to see its stops";
      root.append(hint);
      return;
    }

    const summary = document.createElement("p");
    summary.id = "route-summary";
    summary.innerHTML =
      `distance <span class="distance-km">${wireFloat(route.distance_km)}</span> km, ` +
      `travel time <span class="travel-time-h">${wireFloat(route.travel_time_h)}</span> h`;
    root.append(summary);

    const list = document.createElement("ol");
    list.id = "poi-list";
    for (const poi of route.pois) {
      const item = document.createElement("li");
      item.className = "poi-row";
      item.dataset.poi = String(poi.id);

      const check = document.createElement("input");
      check.type = "checkbox";
      check.className = "radar-check";
      check.checked = checked.has(poi.id);
      check.addEventListener("change", () => onToggleChecked(poi.id, check.checked));
      item.append(check);

      const swatch = document.createElement("span");
      swatch.className = "swatch";
      swatch.style.backgroundColor = colors.get(poi.id) ?? "#999";
      item.append(swatch);

      const name = document.createElement("span");
      name.className = "poi-name";
      name.textContent = poi.name;
      item.append(name);

      const category = document.createElement("span");
      category.className = "poi-category";
      category.textContent = poi.category;
      item.append(category);

      list.append(item);
    }
    root.append(list);
  }

  return { root, render };
}
