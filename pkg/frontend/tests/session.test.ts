/**
 * The exported session file must pass the toolkit's own validator.
 */

import { execFileSync } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { initialState, setAffineCoefficients } from "../src/state.js";
import { exportSession, recordFromState } from "../src/session.js";

let dir: string;

beforeAll(() => {
  dir = mkdtempSync(join(tmpdir(), "lumablend-session-"));
});

afterAll(() => {
  rmSync(dir, { recursive: true, force: true });
});

function validate(path: string): { status: number; output: string } {
  try {
    const output = execFileSync(
      "python3",
      ["-m", "lumablend.cli", "validate-session", path],
      { stdio: "pipe" }
    ).toString();
    return { status: 0, output };
  } catch (err: any) {
    return {
      status: err.status ?? -1,
      output: `${err.stdout ?? ""}${err.stderr ?? ""}`,
    };
  }
}

describe("exportSession", () => {
  it("starts with the schema header and one JSON object per line", () => {
    const state = initialState();
    const text = exportSession([recordFromState(state, "alice", ["g1"], 1000)]);
    const lines = text.trimEnd().split("\n");
    expect(JSON.parse(lines[0])).toEqual({ schema: 1 });
    const record = JSON.parse(lines[1]);
    expect(record.subject_tag).toBe("alice");
    expect(record.group_tags).toEqual(["g1"]);
    expect(record.model.kind).toBe("power");
    expect(record.background).toBe("discrete-10");
  });

  it("produces a file the CLI validator accepts", () => {
    let state = initialState();
    const records = [
      recordFromState(state, "alice", ["expert"], 1000),
      recordFromState(setAffineCoefficients(state, 0.6, 1.0), "bob", [], 1001),
    ];
    const path = join(dir, "session.jsonl");
    writeFileSync(path, exportSession(records));
    const result = validate(path);
    expect(result.status, result.output).toBe(0);
  });

  it("is rejected by the validator when a record breaks an invariant", () => {
    const record = recordFromState(initialState(), "alice", [], 1000);
    const broken = { ...record, s: 1.5 }; // outside (0, 1]
    const path = join(dir, "broken.jsonl");
    writeFileSync(path, exportSession([broken]));
    const result = validate(path);
    expect(result.status, result.output).toBe(2);
  });
});
