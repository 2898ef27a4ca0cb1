import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { mountApp, type AppHandle } from "../src/app";
import { PALETTE } from "../src/palette";
import { installFetchStub, flush, type FetchStub } from "./fetchStub";
import { RECOMMEND_DRIVING_BODY, RECOMMEND_WALKING_BODY } from "./fixtures";

let stub: FetchStub;
let root: HTMLElement;
let app: AppHandle;

beforeEach(() => {
  stub = installFetchStub();
  document.body.innerHTML = "";
  root = document.createElement("div");
  document.body.append(root);
  app = mountApp(root, new ApiClient(""), "tile://{z}/{x}/{y}");
});

afterEach(() => {
  stub.restore();
});

function icon(poiId: number): SVGCircleElement {
  const el = root.querySelector<SVGCircleElement>(`circle.poi-icon[data-poi="${poiId}"]`);
  if (!el) throw new Error(`no map icon for POI ${poiId}`);
  return el;
}

function clickIcon(poiId: number): void {
  icon(poiId).dispatchEvent(new MouseEvent("click"));
}

function submitBtn(): HTMLButtonElement {
  return root.querySelector<HTMLButtonElement>("#submit-btn")!;
}

async function runDefaultQuery(): Promise<void> {
  await app.ready;
  clickIcon(1);
  submitBtn().click();
  await flush();
}

function barRowCheckbox(index: number): HTMLInputElement {
  return root.querySelector<HTMLInputElement>(
    `.bar-row[data-route="${index}"] .row-select`,
  )!;
}

function toggleRow(index: number, on: boolean): void {
  const box = barRowCheckbox(index);
  box.checked = on;
  box.dispatchEvent(new Event("change"));
}

function stopCheckbox(poiId: number): HTMLInputElement {
  return root.querySelector<HTMLInputElement>(
    `li.poi-row[data-poi="${poiId}"] .radar-check`,
  )!;
}

function toggleStop(poiId: number, on: boolean): void {
  const box = stopCheckbox(poiId);
  box.checked = on;
  box.dispatchEvent(new Event("change"));
}

function polylines(): SVGPolylineElement[] {
  return [...root.querySelectorAll<SVGPolylineElement>("polyline.route-line")];
}

function listNames(): string[] {
  return [...root.querySelectorAll(".poi-row .poi-name")].map((el) => el.textContent ?? "");
}

function recommendCalls(): number {
  return stub.calls.filter((c) => c.url.startsWith("/recommend")).length;
}

describe("overview-first boot", () => {
  it("shows only the map before the first query", async () => {
    await app.ready;
    expect(root.querySelectorAll("circle.poi-icon")).toHaveLength(6);
    expect(root.querySelectorAll(".bar-row")).toHaveLength(0);
    expect(polylines()).toHaveLength(0);
    expect(root.querySelectorAll(".radar-poly")).toHaveLength(0);
    expect(submitBtn().disabled).toBe(true);
  });

  it("bounds the trip length slider by the POI count", async () => {
    await app.ready;
    const slider = root.querySelector<HTMLInputElement>("#length-input")!;
    expect(slider.min).toBe("2");
    expect(slider.max).toBe("6");
  });

  it("draws map tiles from the slippy tile scheme", async () => {
    await app.ready;
    const tiles = [...root.querySelectorAll("image.map-tile")];
    expect(tiles.length).toBeGreaterThan(0);
    for (const tile of tiles) {
      expect(tile.getAttribute("href")).toMatch(/^tile:\/\/\d+\/\d+\/\d+$/);
    }
  });
});

describe("query flow", () => {
  it("enables submit after picking a start on the map", async () => {
    await app.ready;
    expect(submitBtn().disabled).toBe(true);
    clickIcon(1);
    expect(submitBtn().disabled).toBe(false);
    expect(root.querySelector("#start-poi-label")!.textContent).toContain("P1");
  });

  it("renders all panels from one response", async () => {
    await runDefaultQuery();
    expect(root.querySelectorAll(".bar-row")).toHaveLength(10);
    expect(polylines()).toHaveLength(1);
    expect(polylines()[0].dataset.route).toBe("0");
    expect(listNames()).toEqual(["P1", "P5", "P4"]);
    expect(root.querySelectorAll(".radar-poly")).toHaveLength(3);
  });

  it("shows distance and travel time exactly as the wire sent them", async () => {
    await runDefaultQuery();
    const distance = root.querySelector(".distance-km")!.textContent!;
    const time = root.querySelector(".travel-time-h")!.textContent!;
    expect(RECOMMEND_WALKING_BODY).toContain(`"distance_km":${distance}`);
    expect(RECOMMEND_WALKING_BODY).toContain(`"travel_time_h":${time}`);
  });

  it("highlights the start POI icon", async () => {
    await runDefaultQuery();
    expect(icon(1).getAttribute("stroke")).toBe("#111");
    expect(icon(2).getAttribute("stroke")).toBe("#fff");
  });
});

describe("route selection", () => {
  it("adds a polyline per selected row and shows the most recent stop list", async () => {
    await runDefaultQuery();
    toggleRow(1, true);
    await flush();
    expect(polylines().map((p) => p.dataset.route)).toEqual(["0", "1"]);
    expect(listNames()).toEqual(["P1", "P3", "P4"]);

    toggleRow(1, false);
    await flush();
    expect(polylines().map((p) => p.dataset.route)).toEqual(["0"]);
    expect(listNames()).toEqual(["P1", "P5", "P4"]);
  });

  it("clears the stop list when no route is selected", async () => {
    await runDefaultQuery();
    toggleRow(0, false);
    await flush();
    expect(polylines()).toHaveLength(0);
    expect(root.querySelectorAll(".poi-row")).toHaveLength(0);
    expect(root.querySelectorAll(".radar-poly")).toHaveLength(0);
  });
});

describe("radar interactions", () => {
  it("unchecking a stop refetches the radar without a new recommend call", async () => {
    await runDefaultQuery();
    const before = recommendCalls();
    toggleStop(5, false);
    await flush();
    expect(recommendCalls()).toBe(before);
    expect(root.querySelectorAll(".radar-poly")).toHaveLength(2);
    const checkedCall = stub.calls[stub.calls.length - 1];
    expect(checkedCall.url).toContain("checked=1%2C4");
  });

  it("rechecking restores the full polygon set", async () => {
    await runDefaultQuery();
    toggleStop(5, false);
    await flush();
    toggleStop(5, true);
    await flush();
    expect(root.querySelectorAll(".radar-poly")).toHaveLength(3);
  });
});

describe("mode changes", () => {
  it("reissues the query with identical start and length", async () => {
    await runDefaultQuery();
    expect(recommendCalls()).toBe(1);
    const select = root.querySelector<HTMLSelectElement>("#mode-select")!;
    select.value = "driving";
    select.dispatchEvent(new Event("change"));
    await flush();
    expect(recommendCalls()).toBe(2);
    const second = JSON.parse(stub.calls.filter((c) => c.url.startsWith("/recommend"))[1].body!);
    expect(second).toEqual({ start_poi: 1, length: 3, mode: "driving", k: 10 });
    const time = root.querySelector(".travel-time-h")!.textContent!;
    expect(RECOMMEND_DRIVING_BODY).toContain(`"travel_time_h":${time}`);
  });
});

describe("error handling", () => {
  it("surfaces API errors inline without clearing prior results", async () => {
    await runDefaultQuery();
    const walkDistance = root.querySelector(".distance-km")!.textContent;
    stub.recommendQueue.push({ status: 400, body: '{"code":"unknown_poi","message":"unknown start POI id 77"}' });
    const select = root.querySelector<HTMLSelectElement>("#mode-select")!;
    select.value = "driving";
    select.dispatchEvent(new Event("change"));
    await flush();
    expect(root.querySelector("#query-error")!.textContent).toBe(
      "unknown_poi: unknown start POI id 77",
    );
    expect(root.querySelectorAll(".bar-row")).toHaveLength(10);
    expect(root.querySelector(".distance-km")!.textContent).toBe(walkDistance);
  });

  it("clears the error once a later query succeeds", async () => {
    await app.ready;
    clickIcon(1);
    stub.recommendQueue.push({ status: 400, body: '{"code":"bad_length","message":"length must be at least 2"}' });
    submitBtn().click();
    await flush();
    expect(root.querySelector("#query-error")!.textContent).toContain("bad_length");
    submitBtn().click();
    await flush();
    expect(root.querySelector("#query-error")!.textContent).toBe("");
    expect(root.querySelectorAll(".bar-row")).toHaveLength(10);
  });
});

describe("request cancellation", () => {
  it("aborts a stale recommend request when a newer one is submitted", async () => {
    await app.ready;
    clickIcon(1);
    stub.recommendQueue.push("hang");
    submitBtn().click();
    await flush(1);
    submitBtn().click();
    await flush();
    const recs = stub.calls.filter((c) => c.url.startsWith("/recommend"));
    expect(recs).toHaveLength(2);
    expect(recs[0].aborted).toBe(true);
    expect(recs[1].aborted).toBe(false);
    expect(root.querySelectorAll(".bar-row")).toHaveLength(10);
    expect(root.querySelector("#query-error")!.textContent).toBe("");
  });
});

describe("color assignment", () => {
  it("keeps one color per POI across map, bars, list and radar", async () => {
    await runDefaultQuery();
    // First appearance order in the walking response: 1, 5, 4, 3, 2.
    const expected = PALETTE[1]; // POI 5
    expect(icon(5).getAttribute("fill")).toBe(expected);
    const seg = root.querySelector<HTMLElement>(
      '.bar-row[data-route="0"] .poi-seg[data-poi="5"]',
    )!;
    expect(toRgb(seg.style.backgroundColor)).toBe(toRgb(expected));
    const swatch = root.querySelector<HTMLElement>('li.poi-row[data-poi="5"] .swatch')!;
    expect(toRgb(swatch.style.backgroundColor)).toBe(toRgb(expected));
    const poly = root.querySelector<SVGPolygonElement>('.radar-poly[data-poi="5"]')!;
    expect(poly.getAttribute("stroke")).toBe(expected);
  });

  it("leaves POIs outside the response neutral on the map", async () => {
    await runDefaultQuery();
    // POI 6 is in the catalog but in none of the returned routes.
    expect(icon(6).getAttribute("fill")).toBe("#8a8a8a");
  });
});

function toRgb(color: string): string {
  if (!color.startsWith("#")) {
    return color;
  }
  const r = parseInt(color.slice(1, 3), 16);
  const g = parseInt(color.slice(3, 5), 16);
  const b = parseInt(color.slice(5, 7), 16);
  return `rgb(${r}, ${g}, ${b})`;
}
