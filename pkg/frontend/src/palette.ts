import type { RouteEntry } from "./types";

// Categorical 20-color palette (paired light/dark hues). Colors are
// assigned by order of first appearance across the response's routes and
// stay fixed for the lifetime of that response, so the same POI gets the
// same color on the map, in the bars, in the list and in the radar chart.
export const PALETTE = [
  "#1f77b4",
  "#aec7e8",
  "#ff7f0e",
  "#ffbb78",
  "#2ca02c",
  "#98df8a",
  "#d62728",
  "#ff9896",
  "#9467bd",
  "#c5b0d5",
  "#8c564b",
  "#c49c94",
  "#e377c2",
  "#f7b6d2",
  "#7f7f7f",
  "#c7c7c7",
  "#bcbd22",
  "#dbdb8d",
  "#17becf",
  "#9edae5",
];

export const NEUTRAL_ICON = "#8a8a8a";

export function assignColors(routes: RouteEntry[]): Map<number, string> {
  const colors = new Map<number, string>();
  for (const route of routes) {
    for (const poi of route.pois) {
      if (!colors.has(poi.id)) {
        colors.set(poi.id, PALETTE[colors.size % PALETTE.length]);
      }
    }
  }
  return colors;
}
