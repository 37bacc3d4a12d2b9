/**
 * Pixel math shared with the command-line renderer.
 *
 * Every formula here mirrors the reference implementation operation for
 * operation (same double-precision arithmetic order), so a frame rendered in
 * the browser matches a CLI-rendered raster within 8-bit quantization.
 */

export type PowerModel = { kind: "power"; bezier: number[] };
export type AffineModel = { kind: "affine"; a0: number; a1: number };
export type OpacityModel = PowerModel | AffineModel;

export type BackgroundKind =
  | { kind: "white" }
  | { kind: "discrete"; bands: number }
  | { kind: "continuous" };

export type Mode = "constant-color" | "constant-perception";

export interface CompositeSpec {
  background: BackgroundKind;
  s: number;
  lP: number;
  mode: Mode;
  model: OpacityModel;
  swapWeights?: boolean;
}

/** Evaluate a Bernstein-form polynomial by repeated linear interpolation. */
export function bezierEval(coefficients: number[], s: number): number {
  if (!(s >= 0 && s <= 1)) throw new RangeError(`s=${s} outside [0, 1]`);
  const b = coefficients.slice();
  const n = b.length - 1;
  for (let step = 0; step < n; step++) {
    for (let i = 0; i < n - step; i++) {
      b[i] = (1.0 - s) * b[i] + s * b[i + 1];
    }
  }
  return b[0];
}

/** Raise the degree by one without changing the curve; endpoints carry over. */
export function elevateDegree(coefficients: number[]): number[] {
  const n = coefficients.length - 1;
  const out = [coefficients[0]];
  for (let i = 1; i <= n; i++) {
    const t = i / (n + 1);
    out.push(t * coefficients[i - 1] + (1.0 - t) * coefficients[i]);
  }
  out.push(coefficients[n]);
  return out;
}

/** Opacity of the foreground at relative size s. */
export function opacity(model: OpacityModel, s: number): number {
  if (!(s >= 0 && s <= 1)) throw new RangeError(`s=${s} outside [0, 1]`);
  if (model.kind === "power") {
    if (s === 0) return 0;
    return Math.pow(s, bezierEval(model.bezier, s));
  }
  const y = model.a0 * (1.0 - s) + model.a1 * s;
  if (!(y >= 0 && y <= 1)) {
    throw new RangeError(`affine opacity ${y} outside [0, 1] at s=${s}`);
  }
  return y;
}

/** Observed luminance: convex mix of the target value and the illumination. */
export function forward(lP: number, iA: number, y: number): number {
  return y * lP + (1.0 - y) * iA;
}

/** Average illumination per column (the analytic blurred background). */
export function illuminationProfile(kind: BackgroundKind, width: number): Float64Array {
  const row = new Float64Array(width);
  if (kind.kind === "white") {
    row.fill(1.0);
    return row;
  }
  for (let x = 0; x < width; x++) row[x] = width === 1 ? 0 : x / (width - 1);
  return row;
}

/** Background luminance per column. */
export function backgroundRow(kind: BackgroundKind, width: number): Float64Array {
  if (kind.kind === "discrete") {
    const k = kind.bands;
    const row = new Float64Array(width);
    for (let x = 0; x < width; x++) {
      const band = Math.min(k - 1, Math.floor((x * k) / width));
      row[x] = band / (k - 1);
    }
    return row;
  }
  return illuminationProfile(kind, width);
}

/** Row range [top, bottom) of the centered foreground band. */
export function bandRows(s: number, height: number): [number, number] {
  const bandH = Math.round(s * height);
  if (bandH < 1) throw new RangeError(`band height rounds to 0 for s=${s}`);
  const top = Math.floor((height - bandH) / 2);
  return [top, top + bandH];
}

const clamp01 = (v: number) => Math.min(1, Math.max(0, v));

/** Render the spec into a row-major luminance buffer. */
export function composite(spec: CompositeSpec, width: number, height: number): Float64Array {
  const bg = backgroundRow(spec.background, width);
  const out = new Float64Array(width * height);
  for (let r = 0; r < height; r++) out.set(bg, r * width);

  const [top, bottom] = bandRows(spec.s, height);
  if (spec.mode === "constant-color") {
    for (let r = top; r < bottom; r++) {
      for (let x = 0; x < width; x++) out[r * width + x] = spec.lP;
    }
  } else {
    const y = opacity(spec.model, spec.s);
    const illum = illuminationProfile(spec.background, width);
    for (let r = top; r < bottom; r++) {
      for (let x = 0; x < width; x++) {
        out[r * width + x] = spec.swapWeights
          ? (1.0 - y) * spec.lP + y * illum[x]
          : forward(spec.lP, illum[x], y);
      }
    }
  }
  for (let i = 0; i < out.length; i++) out[i] = clamp01(out[i]);
  return out;
}

/** Map luminance to 8-bit gray, round(255 * v). */
export function quantize(buffer: Float64Array): Uint8Array {
  const out = new Uint8Array(buffer.length);
  for (let i = 0; i < buffer.length; i++) out[i] = Math.round(255 * clamp01(buffer[i]));
  return out;
}
