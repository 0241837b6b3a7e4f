"""HTTP face of the service: three endpoints over QaService.

Responses are serialized by hand with sorted keys so that identical
requests against identical fixtures produce byte-identical bodies.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import Response

from .errors import MathQaError
from .service import error_code


def _json_response(payload, status_code=200):
    body = json.dumps(payload, ensure_ascii=False, sort_keys=True,
                      separators=(",", ":"))
    return Response(content=body, status_code=status_code,
                    media_type="application/json")


def _error_response(code, detail, status_code=400, **extra):
    payload = {"error": {"code": code, "detail": detail, **extra}}
    return _json_response(payload, status_code=status_code)


async def _read_json(request):
    try:
        data = await request.json()
    except Exception:
        return None
    return data if isinstance(data, dict) else None


def create_app(service, static_dir=None):
    app = FastAPI(title="mathqa", docs_url=None, redoc_url=None,
                  openapi_url=None)

    @app.post("/api/question")
    async def question(request: Request):
        data = await _read_json(request)
        if data is None or not isinstance(data.get("text"), str):
            return _error_response(
                "invalid_request", 'body must be {"text": string, "lang"?: string}'
            )
        lang = data.get("lang", "en")
        if not isinstance(lang, str):
            return _error_response("invalid_request", "lang must be a string")
        envelope = service.answer_question(data["text"], lang=lang)
        return _json_response(envelope.to_dict())

    @app.post("/api/calculate")
    async def calculate(request: Request):
        data = await _read_json(request)
        if data is None or not isinstance(data.get("formula"), str):
            return _error_response(
                "invalid_request",
                'body must be {"formula": string, "bindings"?: {symbol: number}}',
            )
        bindings = data.get("bindings", {})
        if not isinstance(bindings, dict):
            return _error_response("invalid_request",
                                   "bindings must be an object")
        try:
            result = service.calculate(data["formula"], bindings)
        except MathQaError as exc:
            extra = {}
            symbols = getattr(exc, "symbols", None)
            if symbols:
                extra["symbols"] = list(symbols)
            construct = getattr(exc, "construct", None)
            if construct:
                extra["construct"] = construct
            return _error_response(error_code(exc), str(exc), **extra)
        return _json_response(result)

    @app.get("/api/health")
    async def health():
        return _json_response({
            "status": "ok",
            "sources": service.source_inventory(),
            "constants": {k: v for k, v in sorted(service.constants.items())},
        })

    if static_dir is not None:
        static_dir = Path(static_dir)
        if static_dir.is_dir():
            from fastapi.staticfiles import StaticFiles

            app.mount("/", StaticFiles(directory=static_dir, html=True),
                      name="static")

    return app
