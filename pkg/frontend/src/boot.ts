/** Browser entry point: fetch defaults, mount the calculator. */

import { ApiClient } from "./api.js";
import { apiBase } from "./config.js";
import { initApp } from "./main.js";
import type { DefaultsDoc } from "./types.js";

async function bootstrap(): Promise<void> {
  if (typeof document === "undefined") return;
  const root = document.getElementById("app");
  if (!root) return;
  const client = new ApiClient(apiBase());
  try {
    const defaults = await client.get<DefaultsDoc>("/v1/defaults");
    initApp(root, client, defaults);
  } catch (error) {
    root.innerHTML = `<p class="error">cannot reach the estimator API at ${apiBase()}: ${String(error)}</p>`;
  }
}

void bootstrap();
