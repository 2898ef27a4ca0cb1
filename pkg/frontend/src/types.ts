// Wire types for the recommendation service JSON API. Field names match
// the service payloads exactly; the client adds nothing and renames nothing.

export interface PoiSummary {
  id: number;
  name: string;
  category: string;
  lat: number;
  lon: number;
  popularity: number;
  visits: number;
  avg_duration: number;
}

export interface PoiListResponse {
  schema_version: number;
  model_version: string;
  pois: PoiSummary[];
}

export interface PoiRef {
  id: number;
  name: string;
  category: string;
  lat: number;
  lon: number;
}

export interface RouteDisplay {
  total: number;
  poi_scores: number[];
  transition_scores: number[];
}

export interface RouteEntry {
  pois: PoiRef[];
  poi_scores: number[];
  transition_scores: number[];
  total: number;
  distance_km: number;
  travel_time_h: number;
  display: RouteDisplay;
}

export interface RecommendRequest {
  start_poi: number;
  length: number;
  mode: string;
  k: number;
}

export interface RecommendResponse {
  schema_version: number;
  model_version: string;
  query: RecommendRequest;
  radar_scope: string;
  truncated: boolean;
  degenerate: { route_totals: boolean; transition_scores: boolean };
  routes: RouteEntry[];
}

export interface RadarPoiEntry {
  id: number;
  raw: number[];
  scaled: number[];
}

export interface RadarResponse {
  schema_version: number;
  model_version: string;
  poi: number;
  route: number[];
  checked: number[];
  radar_scope: string;
  axes: string[];
  degenerate_axes: boolean[];
  pois: RadarPoiEntry[];
}

export interface ErrorBody {
  code: string;
  message: string;
}
