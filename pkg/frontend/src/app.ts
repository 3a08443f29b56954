/**
 * Single-page shell with two routes: #/play (patient game view) and
 * #/therapist (console: level editor, histogram of the live voice,
 * patient history with trends, EMR export, replay). All numbers shown are
 * server-sent; the client only captures audio and draws.
 */

import { ApiClient } from "./api.js";
import { MicSource, streamEncoder } from "./capture.js";
import {
  ABSENT,
  METRIC_KEYS,
  emrSummary,
  sessionRows,
  trendView,
} from "./dashboard.js";
import { gameCommands } from "./game_render.js";
import type { StateSummary } from "./game_render.js";
import { DEFAULT_HISTOGRAM, drawCommands, histogramCommands } from "./histogram.js";
import {
  LEVEL_FIELDS,
  buildLevelRequest,
  configToValues,
  validateLevel,
} from "./level_editor.js";
import type { LevelValues } from "./level_editor.js";
import { LiveConnection } from "./live.js";

const api = new ApiClient("");
const root = document.getElementById("app")!;

type Cleanup = () => void;
let cleanup: Cleanup = () => {};

function route(): void {
  cleanup();
  root.textContent = "";
  if (location.hash.startsWith("#/therapist")) {
    cleanup = therapistView();
  } else {
    cleanup = playView();
  }
}

window.addEventListener("hashchange", route);

// -- shared widgets ----------------------------------------------------------

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text) node.textContent = text;
  return node;
}

function banner(kind: "error" | "info", text: string): HTMLElement {
  return el("div", { class: `banner ${kind}` }, text);
}

async function patientPicker(): Promise<HTMLSelectElement> {
  const select = el("select", { id: "patient" });
  for (const p of await api.listPatients()) {
    select.append(el("option", { value: p.id }, p.display_name));
  }
  return select;
}

async function levelPicker(): Promise<HTMLSelectElement> {
  const select = el("select", { id: "level" });
  for (const lv of await api.listLevels()) {
    select.append(el("option", { value: lv.id }, lv.name));
  }
  return select;
}

// -- play route ------------------------------------------------------------------

function playView(): Cleanup {
  const title = el("h1", {}, "Voice flight");
  const controls = el("div", { class: "controls" });
  const canvas = el("canvas", { width: "800", height: "400" });
  const histo = el("canvas", { width: "800", height: "240" });
  const status = el("p", { class: "status" }, "pick a patient and level, then start");
  root.append(title, controls, status, canvas, histo);

  let connection: LiveConnection | null = null;
  let mic: MicSource | null = null;
  let raf = 0;
  let lastState: StateSummary | null = null;

  const startButton = el("button", {}, "Start session");
  void (async () => {
    const patients = await patientPicker();
    const levels = await levelPicker();
    controls.append(patients, levels, startButton);
    startButton.onclick = () => {
      void start(patients.value, levels.value);
    };
  })();

  async function start(patientId: string, levelId: string): Promise<void> {
    mic = new MicSource();
    const encode = streamEncoder(mic.sampleRate, (frame) => connection?.sendAudio(frame));
    try {
      // permission first: no session is opened when the mic is denied
      await mic.start(encode);
    } catch {
      status.replaceChildren(banner("error", "microphone permission denied — no session started"));
      mic = null;
      return;
    }
    const session = await api.startSession(patientId, levelId);
    const ws = new WebSocket(api.liveUrl(session.session_id));
    ws.binaryType = "arraybuffer";
    connection = new LiveConnection(ws as never);
    status.textContent = "live";
    loop();
  }

  function loop(): void {
    raf = requestAnimationFrame(loop);
    const conn = connection;
    if (!conn) return;
    lastState = conn.states.newest() ?? lastState;
    const ctx = canvas.getContext("2d")!;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    if (lastState) {
      for (const c of gameCommands(lastState, canvas.width, canvas.height)) {
        if (c.kind === "ship") {
          ctx.fillStyle = "#1976d2";
          ctx.beginPath();
          ctx.arc(c.x, c.y, c.r, 0, Math.PI * 2);
          ctx.fill();
        } else if (c.kind === "planet") {
          ctx.fillStyle = "#555";
          ctx.beginPath();
          ctx.arc(c.x, c.y, c.r, 0, Math.PI * 2);
          ctx.fill();
        } else {
          ctx.fillStyle = "#000";
          ctx.font = "16px sans-serif";
          ctx.fillText(c.text, 10, 20);
        }
      }
    }
    const hctx = histo.getContext("2d")!;
    hctx.clearRect(0, 0, histo.width, histo.height);
    drawCommands(
      hctx,
      histogramCommands(conn.history.snapshot(), {
        ...DEFAULT_HISTOGRAM,
        width: histo.width,
        height: histo.height,
      }),
    );
    if (conn.status === "ended") {
      status.textContent = `session saved: ${JSON.stringify(conn.sessionEnd)}`;
      stop();
    } else if (conn.needsReconnectPrompt) {
      status.replaceChildren(
        banner("error", "connection lost — the unsaved session was aborted; reconnect to retry"),
      );
      stop();
    } else if (conn.status === "error") {
      status.replaceChildren(banner("error", conn.errorMessage ?? "stream error"));
      stop();
    }
  }

  function stop(): void {
    mic?.stop();
    mic = null;
  }

  return () => {
    cancelAnimationFrame(raf);
    stop();
    connection?.stop();
  };
}

// -- therapist route ------------------------------------------------------------------

function therapistView(): Cleanup {
  const title = el("h1", {}, "Therapist console");
  const editor = el("section", { class: "editor" });
  const history = el("section", { class: "history" });
  root.append(title, editor, history);
  void renderEditor(editor);
  void renderHistory(history);
  return () => {};
}

async function renderEditor(container: HTMLElement): Promise<void> {
  container.append(el("h2", {}, "Level editor"));
  const levels = await api.listLevels();
  const nameInput = el("input", { value: "new level" });
  const form = el("div", { class: "level-form" });
  const inputs = new Map<string, HTMLInputElement>();
  const errors = new Map<string, HTMLElement>();

  const initial: LevelValues =
    levels.length > 0
      ? configToValues(levels[levels.length - 1].config)
      : configToValues({
          sensitivity: 0.25, x_spread: 0.1, y_spread: 0.8, incoming_speed: 0.2,
          voice_maintenance_ms: 200, session_duration_s: 60,
          pitch_threshold_mel: 200, spawn_interval_s: 2,
          planet_radius: 0.05, ship_radius: 0.03, rng_seed: 0,
        });

  for (const field of LEVEL_FIELDS) {
    const row = el("label", {}, field.label + " ");
    const input = el("input", { value: String(initial[field.name]) });
    const err = el("span", { class: "field-error" });
    row.append(input, err);
    form.append(row);
    inputs.set(field.name, input);
    errors.set(field.name, err);
  }

  const save = el("button", {}, "Save level");
  const note = el("p", {});
  save.onclick = async () => {
    const values: LevelValues = {};
    for (const [name, input] of inputs) values[name] = Number(input.value);
    const problems = validateLevel(values);
    for (const [name, err] of errors) err.textContent = problems[name] ?? "";
    const request = buildLevelRequest(nameInput.value, values);
    if (!request) return; // inline validation failed: nothing is sent
    const record = await api.createLevel(request);
    note.textContent = `saved ${record.name} (${record.id}) — selectable for new sessions now`;
  };
  container.append(nameInput, form, save, note);
}

async function renderHistory(container: HTMLElement): Promise<void> {
  container.append(el("h2", {}, "Patient history"));
  const picker = await patientPicker();
  const table = el("table", { class: "sessions" });
  const trends = el("div", { class: "trends" });
  const exportLink = el("a", {}, "Download EMR document");
  container.append(picker, table, trends, exportLink);

  async function refresh(): Promise<void> {
    const pid = picker.value;
    if (!pid) return;
    const rows = sessionRows(await api.sessionsText(pid));
    table.textContent = "";
    const head = el("tr");
    head.append(el("th", {}, "started"), el("th", {}, "estimator"));
    for (const key of METRIC_KEYS) head.append(el("th", {}, key));
    head.append(el("th", {}, "replay"));
    table.append(head);
    for (const row of rows) {
      const tr = el("tr");
      tr.append(el("td", {}, row.startedAt), el("td", {}, row.estimator));
      for (const key of METRIC_KEYS) tr.append(el("td", {}, row.metrics[key]));
      const play = el("button", {}, "▶ voice");
      play.onclick = () => void new Audio(api.recordingUrl(row.id)).play();
      const td = el("td");
      td.append(play);
      tr.append(td);
      table.append(tr);
    }

    trends.textContent = "";
    for (const metric of ["phonation_time_ms", "pitch_change_mel", "duration_s", "reaction_time_ms"]) {
      const view = trendView(await api.trendText(pid, metric));
      const slope = view.slope === ABSENT ? "n/a" : view.slope;
      trends.append(
        el("p", {}, `${view.metricName}: n=${view.n}, slope ${slope} per session`),
      );
    }

    const emrText = await api.emrText(pid);
    const summary = emrSummary(emrText);
    exportLink.setAttribute(
      "href",
      URL.createObjectURL(new Blob([emrText], { type: "application/json" })),
    );
    exportLink.setAttribute("download", `emr-${summary.patientName}.json`);
  }

  picker.onchange = () => void refresh();
  if (picker.value) void refresh();
}

route();
