/** API base URL: runtime override via window.AQUAMETER_API_BASE, else local dev. */

declare global {
  interface Window {
    AQUAMETER_API_BASE?: string;
  }
}

const DEFAULT_BASE = "http://127.0.0.1:8000";

export function apiBase(): string {
  if (typeof window !== "undefined" && window.AQUAMETER_API_BASE) {
    return window.AQUAMETER_API_BASE.replace(/\/+$/, "");
  }
  return DEFAULT_BASE;
}
