import assert from "node:assert/strict";
import { test } from "node:test";

import { ClipSource, streamEncoder } from "../src/capture.js";
import { fixtureJson } from "./fixtures.js";

interface AudioFixture {
  sample_rate: number;
  chunk_samples: number;
  samples: number[];
}

interface WireFixture {
  chunk_samples: number;
  sample_rate: number;
  chunks_base64: string[];
}

test("loopback shim reproduces the recorded upload byte-for-byte", () => {
  const audio = fixtureJson<AudioFixture>("audio_fixture.json");
  const wire = fixtureJson<WireFixture>("wire_upload.json");

  const source = new ClipSource(
    new Float32Array(audio.samples),
    audio.sample_rate,
    audio.chunk_samples,
  );
  const frames: Uint8Array[] = [];
  source.start(streamEncoder(audio.sample_rate, (f) => frames.push(f)));

  assert.equal(frames.length, wire.chunks_base64.length);
  frames.forEach((frame, i) => {
    assert.deepEqual(
      Buffer.from(frame),
      Buffer.from(wire.chunks_base64[i], "base64"),
      `chunk ${i} differs`,
    );
  });
});

test("recorded live telemetry equals recorded offline analysis", () => {
  // the second half of the loopback contract: the server's answer to the
  // exact bytes above matches offline analysis of the same audio
  const live = fixtureJson<unknown[]>("live_pitch.json");
  const offline = fixtureJson<unknown[]>("offline_analysis.json");
  assert.ok(live.length > 0);
  assert.deepEqual(live, offline);
});

test("clip source chunks cover the whole clip in order", () => {
  const samples = new Float32Array(10).map((_, i) => i / 10);
  const source = new ClipSource(samples, 44100, 4);
  const seen: number[] = [];
  source.start((chunk) => seen.push(...chunk));
  assert.deepEqual(seen, Array.from(samples));
});

test("encoder derives timestamps from sample offsets", () => {
  const source = new ClipSource(new Float32Array(8820), 44100, 4410);
  const stamps: bigint[] = [];
  source.start(
    streamEncoder(44100, (frame) => {
      const view = new DataView(frame.buffer, frame.byteOffset);
      stamps.push(view.getBigUint64(12, true));
    }),
  );
  assert.deepEqual(stamps, [0n, 100000n]);
});
