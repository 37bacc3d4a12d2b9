/**
 * Calibration records and the JSONL export format.
 *
 * The emitted file is exactly what the toolkit's session validator and store
 * consume: a {"schema": 1} header line followed by one record per line.
 */

import { OpacityModel } from "./core.js";
import { UiState, backgroundOf } from "./state.js";

export const SCHEMA_VERSION = 1;
export const UI_VERSION = "lumablend-ui/0.1.0";

export interface CalibrationRecord {
  subject_tag: string;
  group_tags: string[];
  model: OpacityModel;
  s: number;
  l_p: number;
  background: string;
  timestamp: number;
  ui_version: string;
}

export function backgroundLabel(state: UiState): string {
  const kind = backgroundOf(state);
  if (kind.kind === "white") return "white";
  if (kind.kind === "discrete") return `discrete-${kind.bands}`;
  return "continuous";
}

export function recordFromState(
  state: UiState,
  subjectTag: string,
  groupTags: string[],
  timestamp: number
): CalibrationRecord {
  return {
    subject_tag: subjectTag,
    group_tags: groupTags,
    model: state.model,
    s: state.s,
    l_p: state.lP,
    background: backgroundLabel(state),
    timestamp,
    ui_version: UI_VERSION,
  };
}

export function exportSession(records: CalibrationRecord[]): string {
  const lines = [JSON.stringify({ schema: SCHEMA_VERSION })];
  for (const record of records) lines.push(JSON.stringify(record));
  return lines.join("\n") + "\n";
}
