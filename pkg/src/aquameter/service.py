"""Stateless HTTP service exposing the estimator.

The request body for the calculation endpoints is a scenario document with
everything inline (no file references); the ``version`` field is optional
here because the endpoint already scopes the format. Responses carry the
same documents the CLI emits with ``--format json``, plus per-field
validation errors on 422. No state is kept between requests: the service
is a pure function over request bodies, which keeps it auditable and
trivially scalable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from .quantities import ValidationError
from .run import run_estimate, run_project, run_sweep
from .scenario import (
    DEFAULTS,
    SCENARIO_VERSION,
    builtin_scenario_names,
    builtin_scenario_payload,
    scenario_from_payload,
)

DEFAULT_CORS_ORIGINS = [
    "http://localhost:5173",
    "http://localhost:8080",
    "http://127.0.0.1:5173",
    "http://127.0.0.1:8080",
]


def _validation_response(err: ValidationError) -> JSONResponse:
    return JSONResponse(
        status_code=422,
        content={"errors": [{"field": i.field, "message": i.message} for i in err.issues]},
    )


async def _read_scenario(request: Request):
    content_type = request.headers.get("content-type", "")
    if "application/json" not in content_type:
        return None, JSONResponse(
            status_code=400,
            content={"error": f"expected application/json body, got {content_type or 'none'}"},
        )
    try:
        payload = json.loads(await request.body())
    except (json.JSONDecodeError, UnicodeDecodeError) as err:
        return None, JSONResponse(status_code=400, content={"error": f"malformed JSON body: {err}"})
    if not isinstance(payload, dict):
        return None, JSONResponse(status_code=400, content={"error": "body must be a JSON object"})
    return payload, None


def create_app(cors_origins: list[str] | None = None) -> FastAPI:
    app = FastAPI(title="aquameter", version="0.1.0", docs_url="/docs")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins if cors_origins is not None else DEFAULT_CORS_ORIGINS,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.middleware("http")
    async def request_log(request: Request, call_next):
        started = time.monotonic()
        response = await call_next(request)
        print(json.dumps({
            "method": request.method,
            "path": request.url.path,
            "status": response.status_code,
            "duration_ms": round((time.monotonic() - started) * 1000, 3),
        }), flush=True)
        return response

    @app.get("/healthz")
    async def healthz():
        return PlainTextResponse("ok")

    @app.get("/v1/defaults")
    async def defaults():
        return {
            "version": SCENARIO_VERSION,
            "defaults": dict(DEFAULTS),
            "scenarios": {
                name: builtin_scenario_payload(name) for name in builtin_scenario_names()
            },
        }

    @app.post("/v1/estimate")
    async def estimate(request: Request):
        payload, error = await _read_scenario(request)
        if error is not None:
            return error
        try:
            scenario = scenario_from_payload(payload, base_dir=None, require_version=False)
            return run_estimate(scenario)
        except ValidationError as err:
            return _validation_response(err)

    @app.post("/v1/sweep")
    async def sweep(request: Request):
        payload, error = await _read_scenario(request)
        if error is not None:
            return error
        mode = payload.get("mode")
        if mode is not None and mode not in ("monthly", "diurnal"):
            return _validation_response(
                ValidationError(f"mode must be 'monthly' or 'diurnal', got {mode!r}", "mode")
            )
        try:
            scenario = scenario_from_payload(payload, base_dir=None, require_version=False)
            return run_sweep(scenario, mode)
        except ValidationError as err:
            return _validation_response(err)

    @app.post("/v1/project")
    async def project(request: Request):
        payload, error = await _read_scenario(request)
        if error is not None:
            return error
        try:
            scenario = scenario_from_payload(payload, base_dir=None, require_version=False)
            return run_project(scenario)
        except ValidationError as err:
            return _validation_response(err)

    return app


app = create_app()


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="aquameter-api",
        description="Serve the footprint estimator over HTTP.",
    )
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--bind", default="127.0.0.1", help="Address to listen on.")
    parser.add_argument(
        "--cors-origin", action="append", default=None, metavar="ORIGIN",
        help="Allowed CORS origin (repeatable); defaults to localhost dev servers.",
    )
    args = parser.parse_args(argv)

    import uvicorn

    uvicorn.run(
        create_app(cors_origins=args.cors_origin),
        host=args.bind,
        port=args.port,
        log_level="warning",
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
