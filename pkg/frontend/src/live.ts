/**
 * Live session connection: audio frames up, telemetry down. Telemetry is
 * buffered in bounded drop-oldest queues so a slow render loop sees the
 * newest state instead of an ever-growing backlog.
 */

import { BoundedQueue, RollingHistory } from "./buffer.js";
import type { StateSummary } from "./game_render.js";

export interface PitchPayload {
  time: number;
  f0_hz: number | null;
  pitch_mel: number | null;
  midi_note_number: number | null;
  midi_note_name: string | null;
  cents_offset: number | null;
  loudness_db: number;
  voiced: boolean;
  confidence: number;
  sample_index: number;
  frame_duration: number;
}

export interface TelemetryMessage {
  kind: "pitch" | "state" | "session_end" | "error";
  payload: unknown;
}

export type ConnectionStatus =
  | "connecting"
  | "live"
  | "ended"
  | "error"
  | "disconnected";

export interface SocketLike {
  send(data: Uint8Array): void;
  close(): void;
  onopen: (() => void) | null;
  onmessage: ((event: { data: unknown }) => void) | null;
  onclose: (() => void) | null;
}

export class LiveConnection {
  status: ConnectionStatus = "connecting";
  errorMessage: string | null = null;
  sessionEnd: unknown = null;
  readonly states = new BoundedQueue<StateSummary>(64);
  readonly history = new RollingHistory(30);
  latestPitch: PitchPayload | null = null;

  constructor(private readonly socket: SocketLike) {
    socket.onopen = () => {
      this.status = "live";
    };
    socket.onmessage = (event) => this.handleMessage(event.data);
    socket.onclose = () => {
      // closing without session_end means the session was aborted
      if (this.status === "live" || this.status === "connecting") {
        this.status = "disconnected";
      }
    };
  }

  get needsReconnectPrompt(): boolean {
    return this.status === "disconnected";
  }

  sendAudio(frame: Uint8Array): void {
    this.socket.send(frame);
  }

  stop(): void {
    this.socket.close();
  }

  private handleMessage(data: unknown): void {
    const msg = (typeof data === "string" ? JSON.parse(data) : data) as TelemetryMessage;
    if (msg.kind === "pitch") {
      const p = msg.payload as PitchPayload;
      this.latestPitch = p;
      this.history.push({
        time: p.time,
        pitchMel: p.pitch_mel,
        loudnessDb: p.loudness_db,
      });
    } else if (msg.kind === "state") {
      this.states.push(msg.payload as StateSummary);
    } else if (msg.kind === "session_end") {
      this.sessionEnd = msg.payload;
      this.status = "ended";
    } else if (msg.kind === "error") {
      this.errorMessage = String(msg.payload);
      this.status = "error";
    }
  }
}
