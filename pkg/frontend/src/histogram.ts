/**
 * Dense per-frame histogram of the voice: pitch bars in red on the top
 * panel (Mel axis), loudness bars in purple on the bottom panel (dBFS
 * axis), with a guide line at the level's pitch threshold. Pure geometry:
 * the caller executes the returned commands on a canvas.
 */

import type { HistoryPoint } from "./buffer.js";

export const PITCH_COLOR = "red";
export const LOUDNESS_COLOR = "purple";
export const THRESHOLD_COLOR = "gray";

export interface HistogramOptions {
  width: number;
  height: number;
  melMin: number;
  melMax: number;
  dbMin: number;
  dbMax: number;
  thresholdMel: number;
  maxBars: number;
}

export const DEFAULT_HISTOGRAM: HistogramOptions = {
  width: 600,
  height: 240,
  melMin: 0,
  melMax: 1000,
  dbMin: -80,
  dbMax: 0,
  thresholdMel: 200,
  maxBars: 600,
};

export type DrawCommand =
  | { kind: "bar"; color: string; x: number; y: number; w: number; h: number }
  | { kind: "line"; color: string; x1: number; y1: number; x2: number; y2: number }
  | { kind: "label"; color: string; text: string; x: number; y: number };

export function melToY(mel: number, opts: HistogramOptions): number {
  const panel = opts.height / 2;
  const frac = (mel - opts.melMin) / (opts.melMax - opts.melMin);
  return panel - Math.min(1, Math.max(0, frac)) * panel;
}

export function dbToY(db: number, opts: HistogramOptions): number {
  const panel = opts.height / 2;
  const frac = (db - opts.dbMin) / (opts.dbMax - opts.dbMin);
  return opts.height - Math.min(1, Math.max(0, frac)) * panel;
}

export function histogramCommands(
  history: HistoryPoint[],
  opts: HistogramOptions = DEFAULT_HISTOGRAM,
): DrawCommand[] {
  const commands: DrawCommand[] = [];
  const points = history.slice(-opts.maxBars);
  const barW = Math.max(1, opts.width / opts.maxBars);
  const pitchPanel = opts.height / 2;

  points.forEach((p, i) => {
    const x = i * barW;
    if (p.pitchMel !== null) {
      const y = melToY(p.pitchMel, opts);
      commands.push({
        kind: "bar", color: PITCH_COLOR, x, y, w: barW, h: pitchPanel - y,
      });
    }
    const yDb = dbToY(p.loudnessDb, opts);
    commands.push({
      kind: "bar", color: LOUDNESS_COLOR, x, y: yDb, w: barW, h: opts.height - yDb,
    });
  });

  const yThreshold = melToY(opts.thresholdMel, opts);
  commands.push({
    kind: "line", color: THRESHOLD_COLOR,
    x1: 0, y1: yThreshold, x2: opts.width, y2: yThreshold,
  });
  commands.push({ kind: "label", color: PITCH_COLOR, text: "Mel", x: 4, y: 12 });
  commands.push({
    kind: "label", color: LOUDNESS_COLOR, text: "dBFS", x: 4, y: pitchPanel + 12,
  });
  return commands;
}

export function drawCommands(
  ctx: CanvasRenderingContext2D,
  commands: DrawCommand[],
): void {
  for (const c of commands) {
    if (c.kind === "bar") {
      ctx.fillStyle = c.color;
      ctx.fillRect(c.x, c.y, c.w, c.h);
    } else if (c.kind === "line") {
      ctx.strokeStyle = c.color;
      ctx.beginPath();
      ctx.moveTo(c.x1, c.y1);
      ctx.lineTo(c.x2, c.y2);
      ctx.stroke();
    } else {
      ctx.fillStyle = c.color;
      ctx.fillText(c.text, c.x, c.y);
    }
  }
}
