/**
 * Level editor form model: exactly the level-config fields the service
 * accepts, with client-side validation mirroring the server rules so an
 * invalid form never produces a request.
 */

export interface LevelFieldSpec {
  name: string;
  label: string;
  integer: boolean;
  min?: number;
  max?: number;
  exclusiveMin?: boolean;
}

export const LEVEL_FIELDS: readonly LevelFieldSpec[] = [
  { name: "sensitivity", label: "Sensitivity (field/s)", integer: false, min: 0, exclusiveMin: true },
  { name: "x_spread", label: "X spread", integer: false, min: 0, max: 1 },
  { name: "y_spread", label: "Y spread", integer: false, min: 0, max: 1 },
  { name: "incoming_speed", label: "Incoming speed (field/s)", integer: false, min: 0, exclusiveMin: true },
  { name: "voice_maintenance_ms", label: "Voice maintenance (ms)", integer: false, min: 0 },
  { name: "session_duration_s", label: "Session duration (s)", integer: false, min: 0, exclusiveMin: true },
  { name: "pitch_threshold_mel", label: "Pitch threshold (Mel)", integer: false, min: 0, exclusiveMin: true },
  { name: "spawn_interval_s", label: "Spawn interval (s)", integer: false, min: 0, exclusiveMin: true },
  { name: "planet_radius", label: "Planet radius", integer: false, min: 0, exclusiveMin: true },
  { name: "ship_radius", label: "Ship radius", integer: false, min: 0, exclusiveMin: true },
  { name: "rng_seed", label: "RNG seed", integer: true },
];

export type LevelValues = Record<string, number>;

export function validateLevel(values: LevelValues): Record<string, string> {
  const errors: Record<string, string> = {};
  for (const field of LEVEL_FIELDS) {
    const v = values[field.name];
    if (v === undefined || Number.isNaN(v)) {
      errors[field.name] = "required";
      continue;
    }
    if (field.integer && !Number.isInteger(v)) {
      errors[field.name] = "must be an integer";
      continue;
    }
    if (field.min !== undefined) {
      if (field.exclusiveMin ? v <= field.min : v < field.min) {
        errors[field.name] = `must be ${field.exclusiveMin ? ">" : ">="} ${field.min}`;
        continue;
      }
    }
    if (field.max !== undefined && v > field.max) {
      errors[field.name] = `must be <= ${field.max}`;
    }
  }
  return errors;
}

export interface LevelRequest {
  name: string;
  config: LevelValues;
}

/** Returns null when invalid: no request may be sent. */
export function buildLevelRequest(name: string, values: LevelValues): LevelRequest | null {
  if (!name || Object.keys(validateLevel(values)).length > 0) return null;
  const config: LevelValues = {};
  for (const field of LEVEL_FIELDS) config[field.name] = values[field.name];
  return { name, config };
}

export function configToValues(config: Record<string, number>): LevelValues {
  const values: LevelValues = {};
  for (const field of LEVEL_FIELDS) values[field.name] = config[field.name];
  return values;
}
