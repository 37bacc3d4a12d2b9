/**
 * Browser calibration loop.
 *
 * Steer size and luminance with the mouse, toggle mode/background with the
 * arrow keys, tune the opacity coefficients with the sliders until the band
 * looks uniform, then accept and download the session file.
 */

import { bezierEval, composite, opacity, quantize } from "./core.js";
import {
  UiState,
  escalateDegree,
  handleKey,
  handleMouse,
  initialState,
  setAffineCoefficients,
  setPowerCoefficient,
  specOf,
  switchToPower,
} from "./state.js";
import { CalibrationRecord, exportSession, recordFromState } from "./session.js";

let state: UiState = initialState();
const accepted: CalibrationRecord[] = [];

const view = document.getElementById("view") as HTMLCanvasElement;
const curve = document.getElementById("curve") as HTMLCanvasElement;
const sliders = document.getElementById("sliders") as HTMLDivElement;
const status = document.getElementById("status") as HTMLDivElement;
const banner = document.getElementById("banner") as HTMLDivElement;

function renderView(): void {
  const ctx = view.getContext("2d");
  if (!ctx) {
    banner.textContent = "canvas rendering is unavailable in this browser";
    banner.style.display = "block";
    return;
  }
  try {
    const { width, height } = view;
    const gray = quantize(composite(specOf(state), width, height));
    const image = ctx.createImageData(width, height);
    for (let i = 0; i < gray.length; i++) {
      image.data[4 * i] = gray[i];
      image.data[4 * i + 1] = gray[i];
      image.data[4 * i + 2] = gray[i];
      image.data[4 * i + 3] = 255;
    }
    ctx.putImageData(image, 0, 0);
    banner.style.display = "none";
  } catch (err) {
    banner.textContent = `render failed: ${err}`;
    banner.style.display = "block";
  }
}

function renderCurve(): void {
  const ctx = curve.getContext("2d");
  if (!ctx) return;
  const { width, height } = curve;
  ctx.fillStyle = "#fff";
  ctx.fillRect(0, 0, width, height);
  ctx.strokeStyle = "#ccc";
  ctx.strokeRect(0.5, 0.5, width - 1, height - 1);
  ctx.strokeStyle = "#06c";
  ctx.beginPath();
  for (let x = 0; x < width; x++) {
    const s = x / (width - 1);
    const y = opacity(state.model, s);
    const py = (height - 1) * (1 - y);
    if (x === 0) ctx.moveTo(x, py);
    else ctx.lineTo(x, py);
  }
  ctx.stroke();
  // marker at the current size
  ctx.fillStyle = "#c30";
  const mx = state.s * (width - 1);
  const my = (height - 1) * (1 - opacity(state.model, state.s));
  ctx.beginPath();
  ctx.arc(mx, my, 3, 0, 2 * Math.PI);
  ctx.fill();
}

function renderStatus(): void {
  const modelText =
    state.model.kind === "power"
      ? `power, exponent f(${state.s.toFixed(2)}) = ${bezierEval(state.model.bezier, state.s).toFixed(3)}`
      : `affine (${state.model.a0.toFixed(2)}, ${state.model.a1.toFixed(2)})`;
  status.textContent =
    `mode: ${state.mode} | background: ${state.whiteBackground ? "white" : state.discreteScale ? `discrete-${state.bands}` : "continuous"}` +
    ` | s=${state.s.toFixed(3)} l_p=${state.lP.toFixed(3)} | ${modelText} | accepted: ${accepted.length}`;
}

function slider(label: string, value: number, min: number, max: number, step: number, onInput: (v: number) => void): HTMLLabelElement {
  const wrap = document.createElement("label");
  wrap.textContent = label;
  const input = document.createElement("input");
  input.type = "range";
  input.min = String(min);
  input.max = String(max);
  input.step = String(step);
  input.value = String(value);
  input.addEventListener("input", () => {
    onInput(Number(input.value));
    update(false);
  });
  const readout = document.createElement("span");
  readout.textContent = value.toFixed(2);
  input.addEventListener("input", () => (readout.textContent = Number(input.value).toFixed(2)));
  wrap.append(input, readout);
  return wrap;
}

function renderSliders(): void {
  sliders.replaceChildren();
  if (state.model.kind === "power") {
    state.model.bezier.forEach((b, i) => {
      sliders.append(
        slider(`b${i}`, b, 0.001, 4, 0.001, (v) => {
          state = setPowerCoefficient(state, i, v);
        })
      );
    });
  } else {
    const m = state.model;
    sliders.append(
      slider("a0", m.a0, 0.001, 1, 0.001, (v) => {
        state = setAffineCoefficients(state, v, state.model.kind === "affine" ? state.model.a1 : 1);
      }),
      slider("a1", m.a1, 0.001, 1, 0.001, (v) => {
        state = setAffineCoefficients(state, state.model.kind === "affine" ? state.model.a0 : 0.6, v);
      })
    );
  }
}

function update(rebuildSliders: boolean): void {
  renderView();
  renderCurve();
  renderStatus();
  if (rebuildSliders) renderSliders();
}

window.addEventListener("keydown", (ev) => {
  const next = handleKey(state, ev.key);
  if (next !== state) {
    state = next;
    ev.preventDefault();
    update(false);
  }
});

view.addEventListener("mousemove", (ev) => {
  if (ev.buttons !== 1) return;
  const rect = view.getBoundingClientRect();
  const fx = (ev.clientX - rect.left) / rect.width;
  const fy = 1 - (ev.clientY - rect.top) / rect.height; // origin bottom-left
  state = handleMouse(state, fx, fy);
  update(false);
});

(document.getElementById("escalate") as HTMLButtonElement).addEventListener("click", () => {
  state = escalateDegree(state);
  update(true);
});

(document.getElementById("use-power") as HTMLButtonElement).addEventListener("click", () => {
  state = switchToPower(state, [0.2, 0.25, 1.0]);
  update(true);
});

(document.getElementById("use-affine") as HTMLButtonElement).addEventListener("click", () => {
  state = setAffineCoefficients(state, 0.6, 1.0);
  update(true);
});

(document.getElementById("accept") as HTMLButtonElement).addEventListener("click", () => {
  const subject = (document.getElementById("subject") as HTMLInputElement).value || "anonymous";
  const groups = ((document.getElementById("groups") as HTMLInputElement).value || "")
    .split(",")
    .map((t) => t.trim())
    .filter((t) => t.length > 0);
  accepted.push(recordFromState(state, subject, groups, Date.now() / 1000));
  update(false);
});

(document.getElementById("download") as HTMLButtonElement).addEventListener("click", () => {
  if (accepted.length === 0) return;
  const blob = new Blob([exportSession(accepted)], { type: "application/jsonl" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "calibration-session.jsonl";
  a.click();
  URL.revokeObjectURL(a.href);
});

update(true);
