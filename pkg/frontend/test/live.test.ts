import assert from "node:assert/strict";
import { test } from "node:test";

import { LiveConnection } from "../src/live.js";
import type { SocketLike } from "../src/live.js";

class FakeSocket implements SocketLike {
  sent: Uint8Array[] = [];
  closed = false;
  onopen: (() => void) | null = null;
  onmessage: ((event: { data: unknown }) => void) | null = null;
  onclose: (() => void) | null = null;

  send(data: Uint8Array): void {
    this.sent.push(data);
  }

  close(): void {
    this.closed = true;
    this.onclose?.();
  }

  emit(msg: unknown): void {
    this.onmessage?.({ data: JSON.stringify(msg) });
  }
}

function stateMsg(tick: number) {
  return {
    kind: "state",
    payload: { tick, time: tick * 0.01, ship_y: 0.5, score: 0, status: "running", planets: [] },
  };
}

test("telemetry flows into bounded buffers, newest wins", () => {
  const socket = new FakeSocket();
  const conn = new LiveConnection(socket);
  socket.onopen?.();
  assert.equal(conn.status, "live");

  for (let t = 1; t <= 200; t++) socket.emit(stateMsg(t));
  assert.ok(conn.states.length <= 64); // no unbounded buffering
  assert.equal(conn.states.newest()?.tick, 200);
  assert.ok(conn.states.dropped > 0);
});

test("pitch messages land in the rolling history", () => {
  const socket = new FakeSocket();
  const conn = new LiveConnection(socket);
  socket.emit({
    kind: "pitch",
    payload: {
      time: 0.5, f0_hz: 220, pitch_mel: 308, midi_note_number: 57,
      midi_note_name: "A3", cents_offset: 0, loudness_db: -9,
      voiced: true, confidence: 0.9, sample_index: 0, frame_duration: 0.046,
    },
  });
  assert.equal(conn.latestPitch?.pitch_mel, 308);
  assert.equal(conn.history.snapshot().length, 1);
});

test("session_end transitions to ended before the close arrives", () => {
  const socket = new FakeSocket();
  const conn = new LiveConnection(socket);
  socket.onopen?.();
  socket.emit({ kind: "session_end", payload: { session_id: "ts-1", metrics: {} } });
  socket.close();
  assert.equal(conn.status, "ended");
  assert.ok(!conn.needsReconnectPrompt);
});

test("unexpected close mid-session prompts for reconnect", () => {
  const socket = new FakeSocket();
  const conn = new LiveConnection(socket);
  socket.onopen?.();
  socket.emit(stateMsg(1));
  socket.close();
  assert.equal(conn.status, "disconnected");
  assert.ok(conn.needsReconnectPrompt);
});

test("protocol errors surface and stop the session", () => {
  const socket = new FakeSocket();
  const conn = new LiveConnection(socket);
  socket.onopen?.();
  socket.emit({ kind: "error", payload: "bad magic: XXXX" });
  assert.equal(conn.status, "error");
  assert.match(conn.errorMessage ?? "", /bad magic/);
});

test("audio goes out through the socket", () => {
  const socket = new FakeSocket();
  const conn = new LiveConnection(socket);
  conn.sendAudio(new Uint8Array([1, 2, 3]));
  assert.equal(socket.sent.length, 1);
});
