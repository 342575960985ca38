/**
 * HTTP client for the estimator service.
 *
 * Concurrency safety for a single-page client: identical in-flight requests
 * are deduplicated by a stable hash of (path, body), and each view holds a
 * LatestGate so responses arriving out of order are discarded instead of
 * clobbering newer state.
 */

import type { FieldError } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

export class FieldValidationError extends Error {
  constructor(public errors: FieldError[]) {
    super(errors.map((e) => `${e.field}: ${e.message}`).join("; "));
    this.name = "FieldValidationError";
  }
}

/** Stable stringify (sorted object keys) so equal scenarios hash equally. */
export function stableStringify(value: unknown): string {
  if (value === null || typeof value !== "object") return JSON.stringify(value);
  if (Array.isArray(value)) return `[${value.map(stableStringify).join(",")}]`;
  const entries = Object.entries(value as Record<string, unknown>)
    .filter(([, v]) => v !== undefined)
    .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
    .map(([k, v]) => `${JSON.stringify(k)}:${stableStringify(v)}`);
  return `{${entries.join(",")}}`;
}

export function scenarioHash(value: unknown): string {
  const text = stableStringify(value);
  let hash = 5381;
  for (let i = 0; i < text.length; i++) {
    hash = ((hash << 5) + hash + text.charCodeAt(i)) | 0;
  }
  return (hash >>> 0).toString(36) + ":" + text.length.toString(36);
}

/** Monotonic token source; stale responses fail the isCurrent check. */
export class LatestGate {
  private seq = 0;

  next(): number {
    return ++this.seq;
  }

  isCurrent(token: number): boolean {
    return token === this.seq;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private inflight = new Map<string, Promise<unknown>>();

  constructor(
    private base: string,
    private fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  async get<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(`${this.base}${path}`);
    return this.decode<T>(response);
  }

  /** POST with in-flight deduplication keyed by the request's scenario hash. */
  post<T>(path: string, body: unknown): Promise<T> {
    const key = `${path}#${scenarioHash(body)}`;
    const existing = this.inflight.get(key);
    if (existing) return existing as Promise<T>;
    const request = this.doPost<T>(path, body).finally(() => this.inflight.delete(key));
    this.inflight.set(key, request);
    return request;
  }

  private async doPost<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.base}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return this.decode<T>(response);
  }

  private async decode<T>(response: Response): Promise<T> {
    if (response.status === 422) {
      const body = (await response.json()) as { errors?: FieldError[] };
      throw new FieldValidationError(body.errors ?? []);
    }
    if (!response.ok) {
      let detail = "";
      try {
        const body = (await response.json()) as { error?: string };
        detail = body.error ?? "";
      } catch {
        // non-JSON error body; status alone will have to do
      }
      throw new ApiError(response.status, detail || `request failed (${response.status})`);
    }
    return (await response.json()) as T;
  }
}
