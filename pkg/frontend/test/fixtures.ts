import { readFileSync } from "node:fs";

export function fixtureText(name: string): string {
  // compiled test lives in dist/test/, fixtures in frontend/fixtures/
  return readFileSync(new URL(`../../fixtures/${name}`, import.meta.url), "utf-8");
}

export function fixtureJson<T>(name: string): T {
  return JSON.parse(fixtureText(name)) as T;
}
