import { NEUTRAL_ICON } from "../palette";
import type { PoiSummary, RouteEntry } from "../types";

const SVG_NS = "http://www.w3.org/2000/svg";
const TILE_SIZE = 256;
export const MAP_W = 640;
export const MAP_H = 480;

// Stroke colors for route polylines, cycled by route index. Routes are
// distinguished by line color; POI identity is carried by the icons.
const ROUTE_STROKES = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

export const DEFAULT_TILE_URL = "https://tile.openstreetmap.org/{z}/{x}/{y}.png";

interface WorldPoint {
  x: number;
  y: number;
}

// Standard web-mercator pixel coordinates at a given zoom.
function project(lat: number, lon: number, zoom: number): WorldPoint {
  const scale = TILE_SIZE * 2 ** zoom;
  const clamped = Math.max(-85.05112878, Math.min(85.05112878, lat));
  const rad = (clamped * Math.PI) / 180;
  const x = ((lon + 180) / 360) * scale;
  const y = ((1 - Math.log(Math.tan(rad) + 1 / Math.cos(rad)) / Math.PI) / 2) * scale;
  return { x, y };
}

interface Viewport {
  zoom: number;
  originX: number; // world pixel of the viewport's top-left corner
  originY: number;
}

function fitViewport(pois: PoiSummary[]): Viewport {
  if (pois.length === 0) {
    return { zoom: 2, originX: 0, originY: 0 };
  }
  const lats = pois.map((p) => p.lat);
  const lons = pois.map((p) => p.lon);
  const minLat = Math.min(...lats);
  const maxLat = Math.max(...lats);
  const minLon = Math.min(...lons);
  const maxLon = Math.max(...lons);
  // Largest integer zoom at which the padded bounding box still fits.
  let zoom = 18;
  for (; zoom > 1; zoom--) {
    const a = project(maxLat, minLon, zoom);
    const b = project(minLat, maxLon, zoom);
    if (b.x - a.x <= MAP_W * 0.8 && b.y - a.y <= MAP_H * 0.8) {
      break;
    }
  }
  const a = project(maxLat, minLon, zoom);
  const b = project(minLat, maxLon, zoom);
  return {
    zoom,
    originX: (a.x + b.x) / 2 - MAP_W / 2,
    originY: (a.y + b.y) / 2 - MAP_H / 2,
  };
}

export interface MapPanel {
  root: HTMLElement;
  render(
    pois: PoiSummary[],
    startPoi: number | null,
    colors: Map<number, string>,
    selectedRoutes: { index: number; route: RouteEntry }[],
  ): void;
}

export function createMapPanel(
  onPickStart: (poiId: number) => void,
  tileUrl: string = DEFAULT_TILE_URL,
): MapPanel {
  const root = document.createElement("section");
  root.id = "map-panel";
  root.className = "panel";

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("class", "map-svg");
  svg.setAttribute("viewBox", `0 0 ${MAP_W} ${MAP_H}`);
  const tileLayer = document.createElementNS(SVG_NS, "g");
  tileLayer.setAttribute("class", "tile-layer");
  const routeLayer = document.createElementNS(SVG_NS, "g");
  routeLayer.setAttribute("class", "route-layer");
  const iconLayer = document.createElementNS(SVG_NS, "g");
  iconLayer.setAttribute("class", "icon-layer");
  svg.append(tileLayer, routeLayer, iconLayer);
  root.append(svg);

  let viewport: Viewport | null = null;
  let viewportFor = "";

  function toView(lat: number, lon: number): WorldPoint {
    const vp = viewport!;
    const w = project(lat, lon, vp.zoom);
    return { x: w.x - vp.originX, y: w.y - vp.originY };
  }

  function renderTiles(): void {
    tileLayer.replaceChildren();
    const vp = viewport!;
    const maxTile = 2 ** vp.zoom - 1;
    const x0 = Math.max(0, Math.floor(vp.originX / TILE_SIZE));
    const y0 = Math.max(0, Math.floor(vp.originY / TILE_SIZE));
    const x1 = Math.min(maxTile, Math.floor((vp.originX + MAP_W) / TILE_SIZE));
    const y1 = Math.min(maxTile, Math.floor((vp.originY + MAP_H) / TILE_SIZE));
    for (let ty = y0; ty <= y1; ty++) {
      for (let tx = x0; tx <= x1; tx++) {
        const img = document.createElementNS(SVG_NS, "image");
        img.setAttribute("class", "map-tile");
        const url = tileUrl
          .replace("{z}", String(vp.zoom))
          .replace("{x}", String(tx))
          .replace("{y}", String(ty));
        img.setAttribute("href", url);
        img.setAttribute("x", String(tx * TILE_SIZE - vp.originX));
        img.setAttribute("y", String(ty * TILE_SIZE - vp.originY));
        img.setAttribute("width", String(TILE_SIZE));
        img.setAttribute("height", String(TILE_SIZE));
        tileLayer.append(img);
      }
    }
  }

  function render(
    pois: PoiSummary[],
    startPoi: number | null,
    colors: Map<number, string>,
    selectedRoutes: { index: number; route: RouteEntry }[],
  ): void {
    const key = pois.map((p) => p.id).join(",");
    if (!viewport || viewportFor !== key) {
      viewport = fitViewport(pois);
      viewportFor = key;
      renderTiles();
    }

    routeLayer.replaceChildren();
    for (const { index, route } of selectedRoutes) {
      const line = document.createElementNS(SVG_NS, "polyline");
      line.setAttribute("class", "route-line");
      line.dataset.route = String(index);
      const pts = route.pois
        .map((p) => {
          const v = toView(p.lat, p.lon);
          return `${v.x.toFixed(1)},${v.y.toFixed(1)}`;
        })
        .join(" ");
      line.setAttribute("points", pts);
      line.setAttribute("fill", "none");
      line.setAttribute("stroke", ROUTE_STROKES[index % ROUTE_STROKES.length]);
      line.setAttribute("stroke-width", "3");
      line.setAttribute("stroke-opacity", "0.75");
      routeLayer.append(line);
    }

    iconLayer.replaceChildren();
    for (const poi of pois) {
      const v = toView(poi.lat, poi.lon);
      const dot = document.createElementNS(SVG_NS, "circle");
      dot.setAttribute("class", "poi-icon");
      dot.dataset.poi = String(poi.id);
      dot.setAttribute("cx", v.x.toFixed(1));
      dot.setAttribute("cy", v.y.toFixed(1));
      const isStart = poi.id === startPoi;
      dot.setAttribute("r", isStart ? "9" : "6");
      dot.setAttribute("fill", colors.get(poi.id) ?? NEUTRAL_ICON);
      dot.setAttribute("stroke", isStart ? "#111" : "#fff");
      dot.setAttribute("stroke-width", isStart ? "2.5" : "1");
      const label = document.createElementNS(SVG_NS, "title");
      label.textContent = `${poi.name} (${poi.category})`;
      dot.append(label);
      dot.addEventListener("click", () => onPickStart(poi.id));
      iconLayer.append(dot);
    }
  }

  return { root, render };
}
