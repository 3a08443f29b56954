/**
 * Pure projection of server game-state summaries onto canvas commands.
 * The UI never simulates: every position drawn comes from a state message.
 */

export interface StateSummary {
  tick: number;
  time: number;
  ship_y: number;
  score: number;
  status: "running" | "game_over" | "completed";
  planets: [number, number, number][]; // x, y, radius in field units
}

export const SHIP_FIELD_X = 0.1;

export type GameCommand =
  | { kind: "ship"; x: number; y: number; r: number }
  | { kind: "planet"; x: number; y: number; r: number }
  | { kind: "hud"; text: string };

export function gameCommands(
  state: StateSummary,
  width: number,
  height: number,
  shipRadius = 0.03,
): GameCommand[] {
  // field y=0 is the bottom of the screen
  const toX = (x: number) => x * width;
  const toY = (y: number) => height - y * height;
  const commands: GameCommand[] = [
    { kind: "ship", x: toX(SHIP_FIELD_X), y: toY(state.ship_y), r: shipRadius * height },
  ];
  for (const [x, y, r] of state.planets) {
    commands.push({ kind: "planet", x: toX(x), y: toY(y), r: r * height });
  }
  const label =
    state.status === "running"
      ? `score ${state.score}`
      : `${state.status.replace("_", " ")} — score ${state.score}`;
  commands.push({ kind: "hud", text: label });
  return commands;
}
