import { ApiClient, ApiError, isAbort } from "./api";
import { assignColors } from "./palette";
import { createBarsPanel } from "./panels/bars";
import { createMapPanel, DEFAULT_TILE_URL } from "./panels/map";
import { createPoiListPanel } from "./panels/poiList";
import { createQueryPanel } from "./panels/query";
import { createRadarPanel } from "./panels/radar";
import type { PoiSummary, RadarResponse, RecommendResponse } from "./types";

export interface UiState {
  pois: PoiSummary[];
  startPoi: number | null;
  length: number;
  mode: string;
  k: number;
  response: RecommendResponse | null;
  colors: Map<number, string>;
  /** Selected route indices in selection order; the last one is the most
   *  recently chosen and drives the stop list and the radar chart. */
  selectedRoutes: number[];
  /** Checked POI ids of the most recent route, in visiting order. */
  checkedPois: number[];
  radar: RadarResponse | null;
  error: string | null;
}

export interface AppHandle {
  state: UiState;
  /** Resolves when the initial POI load has rendered. */
  ready: Promise<void>;
}

/**
 * Mount the five-panel client: map, query form, stacked route bars, stop
 * list, radar chart. Overview first: before the first query only the map
 * and its POI icons are populated.
 */
export function mountApp(
  root: HTMLElement,
  api: ApiClient,
  tileUrl: string = DEFAULT_TILE_URL,
): AppHandle {
  const state: UiState = {
    pois: [],
    startPoi: null,
    length: 3,
    mode: "walking",
    k: 10,
    response: null,
    colors: new Map(),
    selectedRoutes: [],
    checkedPois: [],
    radar: null,
    error: null,
  };

  const map = createMapPanel(pickStart, tileUrl);
  const query = createQueryPanel({
    onLength(value) {
      state.length = value;
      renderQuery();
    },
    onMode(value) {
      state.mode = value;
      // Same trip, new travel mode: reissue immediately so distances and
      // travel times refresh without further clicks.
      if (state.response) {
        void submit();
      } else {
        renderQuery();
      }
    },
    onK(value) {
      state.k = value;
      renderQuery();
    },
    onSubmit() {
      void submit();
    },
  });
  const bars = createBarsPanel(toggleRoute);
  const list = createPoiListPanel(toggleChecked);
  const radar = createRadarPanel();

  root.replaceChildren();
  const grid = document.createElement("div");
  grid.id = "app-grid";
  grid.append(map.root, query.root, bars.root, list.root, radar.root);
  root.append(grid);

  let radarSeq = 0;

  function currentRoute() {
    if (!state.response || state.selectedRoutes.length === 0) {
      return null;
    }
    const index = state.selectedRoutes[state.selectedRoutes.length - 1];
    return state.response.routes[index] ?? null;
  }

  function renderQuery(): void {
    query.render(state.pois, state.startPoi, state.length, state.mode, state.k, state.error);
  }

  function renderMap(): void {
    const selected = state.response
      ? state.selectedRoutes.map((index) => ({
          index,
          route: state.response!.routes[index],
        }))
      : [];
    map.render(state.pois, state.startPoi, state.colors, selected);
  }

  function renderRoutePanels(): void {
    bars.render(state.response, state.colors, new Set(state.selectedRoutes));
    list.render(currentRoute(), state.colors, new Set(state.checkedPois));
    radar.render(state.radar, state.colors);
  }

  function pickStart(poiId: number): void {
    state.startPoi = poiId;
    renderQuery();
    renderMap();
  }

  async function refreshRadar(): Promise<void> {
    const route = currentRoute();
    if (!route || state.checkedPois.length === 0) {
      state.radar = null;
      radar.render(null, state.colors);
      return;
    }
    const seq = ++radarSeq;
    try {
      const payload = await api.fetchRadar(
        route.pois.map((p) => p.id),
        state.checkedPois,
      );
      if (seq === radarSeq) {
        state.radar = payload;
        radar.render(state.radar, state.colors);
      }
    } catch (err) {
      if (!isAbort(err)) {
        state.error = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
        renderQuery();
      }
    }
  }

  async function submit(): Promise<void> {
    if (state.startPoi === null) {
      return;
    }
    try {
      const response = await api.recommend({
        start_poi: state.startPoi,
        length: state.length,
        mode: state.mode,
        k: state.k,
      });
      state.response = response;
      state.colors = assignColors(response.routes);
      state.error = null;
      state.selectedRoutes = response.routes.length > 0 ? [0] : [];
      const top = currentRoute();
      state.checkedPois = top ? top.pois.map((p) => p.id) : [];
      state.radar = null;
      renderQuery();
      renderMap();
      renderRoutePanels();
      await refreshRadar();
    } catch (err) {
      if (isAbort(err)) {
        return; // a newer submission took over
      }
      // Keep whatever is on screen; only the error line changes.
      state.error = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
      renderQuery();
    }
  }

  function toggleRoute(index: number, on: boolean): void {
    state.selectedRoutes = state.selectedRoutes.filter((i) => i !== index);
    if (on) {
      state.selectedRoutes.push(index);
    }
    const route = currentRoute();
    state.checkedPois = route ? route.pois.map((p) => p.id) : [];
    state.radar = null;
    renderMap();
    renderRoutePanels();
    void refreshRadar();
  }

  function toggleChecked(poiId: number, on: boolean): void {
    const route = currentRoute();
    if (!route) {
      return;
    }
    const wanted = new Set(state.checkedPois);
    if (on) {
      wanted.add(poiId);
    } else {
      wanted.delete(poiId);
    }
    // Keep visiting order regardless of click order.
    state.checkedPois = route.pois.map((p) => p.id).filter((id) => wanted.has(id));
    list.render(route, state.colors, new Set(state.checkedPois));
    void refreshRadar();
  }

  const ready = api
    .fetchPois()
    .then((payload) => {
      state.pois = payload.pois;
      renderQuery();
      renderMap();
      renderRoutePanels();
    })
    .catch((err) => {
      state.error = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
      renderQuery();
    });

  renderQuery();
  renderMap();
  renderRoutePanels();

  return { state, ready };
}
