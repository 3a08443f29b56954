/**
 * Audio sources feeding the live stream. MicSource wraps the browser
 * microphone; ClipSource replays known samples and doubles as the loopback
 * test shim. Both emit mono float chunks which streamEncoder turns into
 * wire frames with sample-offset-derived timestamps, so the byte stream is
 * a pure function of the audio.
 */

import { linearResample } from "./resample.js";
import { packWireFrame } from "./wire.js";

export const SUPPORTED_RATES = [16000, 44100, 48000];

export type ChunkHandler = (chunk: Float32Array) => void;

export interface AudioSource {
  readonly sampleRate: number;
  start(onChunk: ChunkHandler): void | Promise<void>;
  stop(): void;
}

/** Replays a known clip in fixed-size chunks (the loopback shim). */
export class ClipSource implements AudioSource {
  constructor(
    private readonly samples: Float32Array,
    readonly sampleRate: number,
    private readonly chunkSamples: number,
  ) {}

  start(onChunk: ChunkHandler): void {
    for (let i = 0; i < this.samples.length; i += this.chunkSamples) {
      onChunk(this.samples.subarray(i, Math.min(i + this.chunkSamples, this.samples.length)));
    }
  }

  stop(): void {}
}

/** Stateful encoder: chunks in, wire frames out, offsets tracked. */
export function streamEncoder(
  sampleRate: number,
  onFrame: (frame: Uint8Array) => void,
): ChunkHandler {
  let offset = 0;
  return (chunk: Float32Array) => {
    const timestampUs = BigInt(Math.floor((offset * 1_000_000) / sampleRate));
    onFrame(packWireFrame(sampleRate, timestampUs, chunk));
    offset += chunk.length;
  };
}

const WORKLET_SOURCE = `
class CaptureProcessor extends AudioWorkletProcessor {
  process(inputs) {
    const ch0 = inputs[0] && inputs[0][0];
    if (ch0 && ch0.length) {
      const copy = new Float32Array(ch0.length);
      copy.set(ch0);
      this.port.postMessage(copy, [copy.buffer]);
    }
    return true;
  }
}
registerProcessor("vf-capture", CaptureProcessor);
`;

/** Browser microphone capture, resampled client-side to a supported rate. */
export class MicSource implements AudioSource {
  readonly sampleRate: number;
  private context: AudioContext | null = null;
  private stream: MediaStream | null = null;
  private node: AudioWorkletNode | null = null;

  constructor(preferredRate = 48000) {
    this.sampleRate = SUPPORTED_RATES.includes(preferredRate) ? preferredRate : 48000;
  }

  async start(onChunk: ChunkHandler): Promise<void> {
    // permission failure propagates to the caller, which must show an
    // error state and must not open a live session
    this.stream = await navigator.mediaDevices.getUserMedia({ audio: true });
    this.context = new AudioContext();
    const deviceRate = this.context.sampleRate;

    const blob = new Blob([WORKLET_SOURCE], { type: "application/javascript" });
    const url = URL.createObjectURL(blob);
    await this.context.audioWorklet.addModule(url);
    URL.revokeObjectURL(url);

    const source = this.context.createMediaStreamSource(this.stream);
    this.node = new AudioWorkletNode(this.context, "vf-capture");
    this.node.port.onmessage = (event: MessageEvent<Float32Array>) => {
      onChunk(linearResample(event.data, deviceRate, this.sampleRate));
    };
    source.connect(this.node);
  }

  stop(): void {
    this.node?.disconnect();
    this.stream?.getTracks().forEach((t) => t.stop());
    void this.context?.close();
    this.node = null;
    this.stream = null;
    this.context = null;
  }
}
