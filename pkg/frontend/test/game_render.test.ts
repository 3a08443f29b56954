import assert from "node:assert/strict";
import { test } from "node:test";

import { SHIP_FIELD_X, gameCommands } from "../src/game_render.js";
import type { StateSummary } from "../src/game_render.js";

function state(overrides: Partial<StateSummary> = {}): StateSummary {
  return {
    tick: 1, time: 0.05, ship_y: 0.5, score: 0, status: "running", planets: [],
    ...overrides,
  };
}

test("ship is pinned at x = 0.1 of the field and mirrors server ship_y", () => {
  const commands = gameCommands(state({ ship_y: 0.75 }), 800, 400);
  const ship = commands.find((c) => c.kind === "ship");
  assert.ok(ship && ship.kind === "ship");
  assert.equal(ship.x, SHIP_FIELD_X * 800);
  assert.equal(ship.y, 400 - 0.75 * 400);
});

test("every planet comes from the server state, nothing is simulated", () => {
  const planets: [number, number, number][] = [
    [0.9, 0.2, 0.05],
    [0.4, 0.8, 0.05],
  ];
  const commands = gameCommands(state({ planets }), 1000, 500);
  const drawn = commands.filter((c) => c.kind === "planet");
  assert.equal(drawn.length, 2);
  drawn.forEach((c, i) => {
    assert.ok(c.kind === "planet");
    assert.equal(c.x, planets[i][0] * 1000);
    assert.equal(c.y, 500 - planets[i][1] * 500);
  });
});

test("hud reflects score and terminal status", () => {
  const running = gameCommands(state({ score: 7 }), 800, 400).find((c) => c.kind === "hud");
  assert.ok(running && running.kind === "hud" && running.text === "score 7");
  const over = gameCommands(state({ status: "game_over", score: 3 }), 800, 400).find(
    (c) => c.kind === "hud",
  );
  assert.ok(over && over.kind === "hud");
  assert.match(over.text, /game over/);
});
