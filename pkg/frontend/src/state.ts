/**
 * UI state and its transitions, kept free of DOM so they are testable.
 *
 * Keyboard map: left arrow toggles corrected vs uniform band, right arrow
 * toggles white vs lightness-scale background, up arrow toggles discrete vs
 * continuous scale.  Mouse x sets the band's target luminance, mouse y its
 * relative size; both mappings are linear with the origin at the bottom-left.
 */

import {
  BackgroundKind,
  CompositeSpec,
  Mode,
  OpacityModel,
  elevateDegree,
} from "./core.js";

export const COEFFICIENT_MIN = 1e-3; // sliders are bounded to (0, 4]
export const COEFFICIENT_MAX = 4;
export const MAX_DEGREE = 3;

export interface UiState {
  s: number;
  lP: number;
  mode: Mode;
  whiteBackground: boolean;
  discreteScale: boolean;
  bands: number;
  model: OpacityModel;
}

export function initialState(): UiState {
  return {
    s: 0.1,
    lP: 0.5,
    mode: "constant-perception",
    whiteBackground: false,
    discreteScale: true,
    bands: 10,
    model: { kind: "power", bezier: [0.2, 0.25, 1.0] },
  };
}

export function backgroundOf(state: UiState): BackgroundKind {
  if (state.whiteBackground) return { kind: "white" };
  if (state.discreteScale) return { kind: "discrete", bands: state.bands };
  return { kind: "continuous" };
}

export function specOf(state: UiState): CompositeSpec {
  return {
    background: backgroundOf(state),
    s: state.s,
    lP: state.lP,
    mode: state.mode,
    model: state.model,
  };
}

export function handleKey(state: UiState, key: string): UiState {
  switch (key) {
    case "ArrowLeft":
      return {
        ...state,
        mode: state.mode === "constant-perception" ? "constant-color" : "constant-perception",
      };
    case "ArrowRight":
      return { ...state, whiteBackground: !state.whiteBackground };
    case "ArrowUp":
      return { ...state, discreteScale: !state.discreteScale };
    default:
      return state;
  }
}

/** fx, fy are viewport fractions in [0, 1] measured from the bottom-left. */
export function handleMouse(state: UiState, fx: number, fy: number): UiState {
  const clamp = (v: number, lo: number, hi: number) => Math.min(hi, Math.max(lo, v));
  return {
    ...state,
    lP: clamp(fx, 0, 1),
    s: clamp(fy, 0.01, 1), // s=0 would erase the band entirely
  };
}

function clampCoefficient(v: number): number {
  return Math.min(COEFFICIENT_MAX, Math.max(COEFFICIENT_MIN, v));
}

export function setPowerCoefficient(state: UiState, index: number, value: number): UiState {
  if (state.model.kind !== "power") return state;
  const bezier = state.model.bezier.slice();
  if (index < 0 || index >= bezier.length) return state;
  bezier[index] = clampCoefficient(value);
  return { ...state, model: { kind: "power", bezier } };
}

export function setAffineCoefficients(state: UiState, a0: number, a1: number): UiState {
  return {
    ...state,
    model: { kind: "affine", a0: clampCoefficient(Math.min(a0, 1)), a1: clampCoefficient(Math.min(a1, 1)) },
  };
}

export function switchToPower(state: UiState, bezier: number[]): UiState {
  return { ...state, model: { kind: "power", bezier: bezier.map(clampCoefficient) } };
}

/** One more control value, same curve; the tuning continues where it was. */
export function escalateDegree(state: UiState): UiState {
  if (state.model.kind !== "power") return state;
  if (state.model.bezier.length > MAX_DEGREE) return state;
  return { ...state, model: { kind: "power", bezier: elevateDegree(state.model.bezier) } };
}
