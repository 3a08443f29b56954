/**
 * Binary audio frame layout for the live upstream:
 *   "VXA1" | u32 LE sample rate | u32 LE sample count | u64 LE timestamp (us)
 *   | sample_count f32 LE samples
 */

export const WIRE_MAGIC = "VXA1";
const HEADER_BYTES = 20;

export interface WireFrame {
  sampleRate: number;
  timestampUs: bigint;
  samples: Float32Array;
}

export function packWireFrame(
  sampleRate: number,
  timestampUs: bigint | number,
  samples: Float32Array,
): Uint8Array {
  const buf = new ArrayBuffer(HEADER_BYTES + samples.length * 4);
  const view = new DataView(buf);
  for (let i = 0; i < 4; i++) view.setUint8(i, WIRE_MAGIC.charCodeAt(i));
  view.setUint32(4, sampleRate, true);
  view.setUint32(8, samples.length, true);
  view.setBigUint64(12, BigInt(timestampUs), true);
  for (let i = 0; i < samples.length; i++) {
    view.setFloat32(HEADER_BYTES + i * 4, samples[i], true);
  }
  return new Uint8Array(buf);
}

export function parseWireFrame(data: Uint8Array): WireFrame {
  if (data.length < HEADER_BYTES) {
    throw new Error(`wire frame too short: ${data.length} bytes`);
  }
  const view = new DataView(data.buffer, data.byteOffset, data.byteLength);
  const magic = String.fromCharCode(
    view.getUint8(0), view.getUint8(1), view.getUint8(2), view.getUint8(3),
  );
  if (magic !== WIRE_MAGIC) throw new Error(`bad magic: ${magic}`);
  const sampleRate = view.getUint32(4, true);
  const count = view.getUint32(8, true);
  const timestampUs = view.getBigUint64(12, true);
  if (data.length !== HEADER_BYTES + count * 4) {
    throw new Error(`declared ${count} samples but got ${data.length} bytes`);
  }
  const samples = new Float32Array(count);
  for (let i = 0; i < count; i++) {
    samples[i] = view.getFloat32(HEADER_BYTES + i * 4, true);
  }
  return { sampleRate, timestampUs, samples };
}
