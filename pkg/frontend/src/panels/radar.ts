import { wireFloat } from "../format";
import type { RadarResponse } from "../types";

const SVG_NS = "http://www.w3.org/2000/svg";
const W = 420;
const H = 380;
const CX = W / 2;
const CY = H / 2 + 6;
const R = 140;

export interface RadarPanel {
  root: HTMLElement;
  render(radar: RadarResponse | null, colors: Map<number, string>): void;
}

// One polygon per checked POI over the response's feature axes. Axis
// values arrive already scaled to [1, 10]; the chart maps value v to
// radius v / 10 * R and does no other transformation.
export function createRadarPanel(): RadarPanel {
  const root = document.createElement("section");
  root.id = "radar-panel";
  root.className = "panel";

  function vertex(axis: number, axisCount: number, value: number): [number, number] {
    const angle = -Math.PI / 2 + (2 * Math.PI * axis) / axisCount;
    const radius = (value / 10) * R;
    return [CX + radius * Math.cos(angle), CY + radius * Math.sin(angle)];
  }

  function render(radar: RadarResponse | null, colors: Map<number, string>): void {
    root.replaceChildren();
    const heading = document.createElement("h2");
    heading.textContent = "POI features";
    root.append(heading);
    if (!radar || radar.pois.length === 0) {
      const hint = document.createElement("p");
      hint.className = "hint";
      hint.textContent = "check stops in the list to compare their features";
      root.append(hint);
      return;
    }

    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("class", "radar-svg");
    svg.setAttribute("viewBox", `0 0 ${W} ${H}`);

    const grid = document.createElementNS(SVG_NS, "g");
    grid.setAttribute("class", "radar-grid");
    for (const level of [1, 10]) {
      const ring = document.createElementNS(SVG_NS, "circle");
      ring.setAttribute("cx", String(CX));
      ring.setAttribute("cy", String(CY));
      ring.setAttribute("r", String((level / 10) * R));
      ring.setAttribute("fill", "none");
      ring.setAttribute("stroke", "#ccc");
      grid.append(ring);
    }
    const axisCount = radar.axes.length;
    radar.axes.forEach((axis, i) => {
      const [x, y] = vertex(i, axisCount, 10);
      const spoke = document.createElementNS(SVG_NS, "line");
      spoke.setAttribute("x1", String(CX));
      spoke.setAttribute("y1", String(CY));
      spoke.setAttribute("x2", x.toFixed(1));
      spoke.setAttribute("y2", y.toFixed(1));
      spoke.setAttribute("stroke", "#ddd");
      grid.append(spoke);

      const [lx, ly] = vertex(i, axisCount, 12.4);
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("class", "axis-label");
      label.setAttribute("x", lx.toFixed(1));
      label.setAttribute("y", ly.toFixed(1));
      label.setAttribute("text-anchor", "middle");
      label.textContent = axis;
      grid.append(label);
    });
    svg.append(grid);

    const polys = document.createElementNS(SVG_NS, "g");
    polys.setAttribute("class", "radar-polygons");
    for (const entry of radar.pois) {
      const poly = document.createElementNS(SVG_NS, "polygon");
      poly.setAttribute("class", "radar-poly");
      poly.dataset.poi = String(entry.id);
      poly.dataset.values = entry.scaled.map(wireFloat).join(",");
      const points = entry.scaled
        .map((value, i) => {
          const [x, y] = vertex(i, axisCount, value);
          return `${x.toFixed(1)},${y.toFixed(1)}`;
        })
        .join(" ");
      poly.setAttribute("points", points);
      const color = colors.get(entry.id) ?? "#666";
      poly.setAttribute("stroke", color);
      poly.setAttribute("stroke-width", "2");
      poly.setAttribute("fill", color);
      poly.setAttribute("fill-opacity", "0.12");
      polys.append(poly);
    }
    svg.append(polys);
    root.append(svg);
  }

  return { root, render };
}
