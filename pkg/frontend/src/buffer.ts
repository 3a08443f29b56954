/** Bounded drop-oldest queues between the socket and the render loop. */

export class BoundedQueue<T> {
  private items: T[] = [];
  dropped = 0;

  constructor(readonly capacity: number) {
    if (capacity < 1) throw new Error("capacity must be >= 1");
  }

  push(item: T): void {
    if (this.items.length === this.capacity) {
      this.items.shift();
      this.dropped += 1;
    }
    this.items.push(item);
  }

  /** Newest item without consuming; render loops draw only the freshest. */
  newest(): T | undefined {
    return this.items[this.items.length - 1];
  }

  drain(): T[] {
    const out = this.items;
    this.items = [];
    return out;
  }

  get length(): number {
    return this.items.length;
  }
}

export interface HistoryPoint {
  time: number;
  pitchMel: number | null;
  loudnessDb: number;
}

/** Rolling window of analysis results for the histogram panel. */
export class RollingHistory {
  private points: HistoryPoint[] = [];

  constructor(readonly windowS = 30) {}

  push(point: HistoryPoint): void {
    this.points.push(point);
    const cutoff = point.time - this.windowS;
    while (this.points.length && this.points[0].time < cutoff) {
      this.points.shift();
    }
  }

  snapshot(): HistoryPoint[] {
    return this.points.slice();
  }
}
