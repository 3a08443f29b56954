/** Typed fetch wrappers over the local service's REST endpoints. */

import type { LevelRequest } from "./level_editor.js";

export interface Patient {
  id: string;
  display_name: string;
  created_at: string;
  notes: string;
}

export interface LevelRecord {
  id: string;
  name: string;
  config: Record<string, number>;
}

export interface SessionStart {
  session_id: string;
  patient_id: string;
  level_id: string;
  estimator: string;
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (!response.ok) {
      throw new Error(`${init?.method ?? "GET"} ${path}: ${response.status} ${await response.text()}`);
    }
    return (await response.json()) as T;
  }

  listPatients(): Promise<Patient[]> {
    return this.request("/patients");
  }

  createPatient(displayName: string, notes = ""): Promise<Patient> {
    return this.request("/patients", {
      method: "POST",
      body: JSON.stringify({ display_name: displayName, notes }),
    });
  }

  listLevels(): Promise<LevelRecord[]> {
    return this.request("/levels");
  }

  createLevel(req: LevelRequest): Promise<LevelRecord> {
    return this.request("/levels", { method: "POST", body: JSON.stringify(req) });
  }

  updateLevel(id: string, req: LevelRequest): Promise<LevelRecord> {
    return this.request(`/levels/${id}`, { method: "PUT", body: JSON.stringify(req) });
  }

  startSession(patientId: string, levelId: string): Promise<SessionStart> {
    return this.request("/sessions", {
      method: "POST",
      body: JSON.stringify({ patient_id: patientId, level_id: levelId }),
    });
  }

  /** Raw response text: the dashboard renders server bytes, not re-parsed numbers. */
  async rawText(path: string): Promise<string> {
    const response = await fetch(this.baseUrl + path);
    if (!response.ok) throw new Error(`GET ${path}: ${response.status}`);
    return response.text();
  }

  sessionsText(patientId: string): Promise<string> {
    return this.rawText(`/sessions?patient=${encodeURIComponent(patientId)}`);
  }

  trendText(patientId: string, metric: string): Promise<string> {
    return this.rawText(`/patients/${patientId}/trends/${metric}`);
  }

  emrText(patientId: string): Promise<string> {
    return this.rawText(`/patients/${patientId}/emr`);
  }

  liveUrl(sessionId: string): string {
    const base = this.baseUrl || (typeof location !== "undefined" ? location.origin : "");
    return base.replace(/^http/, "ws") + `/live/${sessionId}`;
  }

  replayUrl(sessionId: string): string {
    return `${this.baseUrl}/sessions/${sessionId}/replay`;
  }

  recordingUrl(sessionId: string): string {
    return `${this.baseUrl}/sessions/${sessionId}/recording`;
  }
}
