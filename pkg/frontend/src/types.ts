/** JSON shapes exchanged with the goalviz HTTP API under /api/v1.
 *
 * Field names are snake_case because they mirror the wire format exactly;
 * this module is the single place that spells it out.
 */

export type VisGoalName =
  | "comparison"
  | "composition"
  | "distribution"
  | "trend"
  | "relationship"
  | "cluster"
  | "order"
  | "geospatial";

export type InteractionName = "overview" | "zoom" | "filter" | "details_on_demand";

export type ScaleTypeName = "nominal" | "ordinal" | "interval" | "ratio";

export type ChannelName = "x" | "y" | "color" | "size" | "detail";

export type OrientationName = "horizontal" | "vertical" | "any";

export interface SpecPayload {
  goals: VisGoalName[];
  interaction: InteractionName[];
  user: "lay" | "tech";
  dimensionality: string;
  cardinality: "low" | "high";
  independent_type: ScaleTypeName | null;
  dependent_type: ScaleTypeName | null;
}

export interface LegendPayload {
  title: string;
  type: string;
  position: string;
  font_family: string;
  text_size: number;
}

export interface ColorRangePayload {
  kind: "named" | "custom";
  palette?: string;
  colors?: string[];
}

export interface DashboardPositionPayload {
  row: number;
  col: number;
  width: number;
  height: number;
}

export interface AttributePayload {
  name: string;
  type: ScaleTypeName;
  role: "category" | "measure";
}

export interface AxisPayload {
  name: string;
  channel: ChannelName;
  attribute: AttributePayload | null;
  order_role: boolean;
  min: number | null;
  max: number | null;
}

export interface ModelPayload {
  schema: string;
  title: string;
  legend: LegendPayload | null;
  graphic_type: string;
  interactions: InteractionName[];
  dashboard_position: DashboardPositionPayload | null;
  orientation: OrientationName;
  color_range: ColorRangePayload;
  body:
    | { kind: "axes"; axes: AxisPayload[] }
    | { kind: "graph"; nodes: unknown; edges: unknown };
}

export interface IterationRecordPayload {
  visualization: string;
  status: "validated" | "requires_revision";
  failed_goals: VisGoalName[];
  model_version: string | null;
  timestamp: string;
}

export interface EntryView {
  vid: string;
  name: string;
  information_goal: string;
  spec: SpecPayload | null;
  graphic_type: string | null;
  rule: string | null;
  model_version: string | null;
  needs_revision: boolean;
  last_validation: IterationRecordPayload | null;
}

export interface ProjectView {
  id: string;
  datasets: string[];
  visualizations: Record<string, EntryView>;
  history: IterationRecordPayload[];
}

export interface DerivedEntryView extends EntryView {
  model: ModelPayload;
}

export interface ModelResponse {
  version: string;
  model: ModelPayload;
}

export interface Question {
  goal: VisGoalName;
  text: string;
}

export interface ValidationResponse {
  status: "validated" | "requires_revision";
  failed_goals: VisGoalName[];
  timestamp: string;
  needs_revision: boolean;
  record: IterationRecordPayload;
}

export interface EncodingPayload {
  attribute: string | null;
  scale_type: ScaleTypeName | null;
  min: number | null;
  max: number | null;
  order_role: boolean;
}

export interface ChartDoc {
  version: string;
  title: string;
  graphic_type: string;
  orientation: OrientationName;
  interactions: InteractionName[];
  legend: LegendPayload | null;
  color_range: ColorRangePayload;
  encodings: Partial<Record<ChannelName, EncodingPayload>>;
  data: Record<string, string | number>[];
  dashboard_position: DashboardPositionPayload | null;
}

export interface GraphDoc {
  nodes: { id: string | number; label: string | number }[];
  edges: { source: string | number; target: string | number }[];
}

/** Refinement operations accepted by PATCH .../model. */
export type RefinementOp =
  | { op: "set_channel"; attribute: string; channel: ChannelName; swap?: boolean }
  | { op: "set_order"; attribute: string }
  | { op: "set_orientation"; orientation: OrientationName }
  | { op: "set_legend"; legend: LegendPayload | null }
  | { op: "set_color_range"; color_range: ColorRangePayload }
  | { op: "set_axis_bounds"; channel: ChannelName; min: number | null; max: number | null }
  | { op: "set_title"; title: string }
  | { op: "set_dashboard_position"; position: DashboardPositionPayload | null };

export interface ApiErrorDetail {
  message: string;
  diagnostics?: {
    code: string;
    message: string;
    line: number | null;
    column: number | null;
    path: string | null;
  }[];
  stage?: string;
  current_version?: string;
}
