"""Chat-completions client and a scripted, request-hash keyed mock endpoint."""
from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Mapping, Optional, Union

import httpx

from .config import ModelEndpointConfig


class TransportError(RuntimeError):
    """The endpoint could not be reached or kept failing after retries."""


class AuthError(RuntimeError):
    """Missing credentials or a 401/403 from the endpoint."""


def sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def request_body(config: ModelEndpointConfig, prompt: str) -> dict:
    return {
        "model": config.model_name,
        "messages": [{"role": "user", "content": prompt}],
        "temperature": 0,
        "max_tokens": config.max_tokens,
    }


def _headers(config: ModelEndpointConfig) -> dict:
    headers = {"Content-Type": "application/json"}
    if config.auth:
        token = os.environ.get(config.auth)
        if not token:
            raise AuthError(f"environment variable {config.auth} is not set")
        headers["Authorization"] = f"Bearer {token}"
    return headers


def invoke_model(config: ModelEndpointConfig, prompt: str,
                 client: Optional[httpx.Client] = None) -> str:
    """One chat completion; returns the first choice's message text.

    Transport failures, 429 and 5xx are retried with exponential backoff
    up to ``config.max_attempts`` requests in total.
    """
    own = client is None
    client = client or httpx.Client(timeout=config.request_timeout)
    url = config.base_url.rstrip("/") + "/chat/completions"
    body = request_body(config, prompt)
    headers = _headers(config)
    last = "no attempt made"
    try:
        for attempt in range(config.max_attempts):
            if attempt:
                time.sleep(config.backoff * 2 ** (attempt - 1))
            try:
                resp = client.post(url, json=body, headers=headers)
            except httpx.HTTPError as exc:
                last = f"{type(exc).__name__}: {exc}"
                continue
            if resp.status_code in (401, 403):
                raise AuthError(f"endpoint refused credentials (HTTP {resp.status_code})")
            if resp.status_code == 429 or resp.status_code >= 500:
                last = f"HTTP {resp.status_code}"
                continue
            if resp.status_code >= 400:
                raise TransportError(f"HTTP {resp.status_code}: {resp.text[:200]}")
            try:
                return resp.json()["choices"][0]["message"]["content"] or ""
            except (ValueError, KeyError, IndexError, TypeError) as exc:
                raise TransportError(f"malformed completion payload: {exc}") from exc
        raise TransportError(f"gave up after {config.max_attempts} attempts ({last})")
    finally:
        if own:
            client.close()


class MockEndpoint:
    """Canned responses keyed by the SHA-256 of the prompt.

    Fixture layout (JSON)::

        {"default": "...",
         "responses": {"<prompt sha256>": "..."},
         "models": {"<model>": {"default": "...", "responses": {...}}}}

    A model entry overrides the top level for that model.  Unknown prompts
    fall back to ``default`` (or an empty answer).
    """

    def __init__(self, fixture: Union[Mapping, str, Path]):
        if not isinstance(fixture, Mapping):
            fixture = json.loads(Path(fixture).read_text("utf-8"))
        self.fixture = fixture
        self.calls = 0
        self._lock = threading.Lock()

    def answer(self, model: str, prompt: str) -> str:
        with self._lock:
            self.calls += 1
        key = sha256(prompt)
        scoped = self.fixture.get("models", {}).get(model, {})
        for table in (scoped, self.fixture):
            if key in table.get("responses", {}):
                return table["responses"][key]
        if "default" in scoped:
            return scoped["default"]
        return self.fixture.get("default", "")

    def completion(self, body: Mapping) -> dict:
        prompt = "\n".join(m.get("content", "") for m in body.get("messages", []) if m.get("role") == "user")
        text = self.answer(body.get("model", ""), prompt)
        return {
            "id": "mock-" + sha256(prompt)[:12],
            "object": "chat.completion",
            "model": body.get("model", ""),
            "choices": [{"index": 0, "finish_reason": "stop",
                         "message": {"role": "assistant", "content": text}}],
        }

    def transport(self) -> httpx.MockTransport:
        def handler(request: httpx.Request) -> httpx.Response:
            if not request.url.path.endswith("/chat/completions"):
                return httpx.Response(404, json={"error": "not found"})
            return httpx.Response(200, json=self.completion(json.loads(request.content)))
        return httpx.MockTransport(handler)

    def client(self) -> httpx.Client:
        return httpx.Client(transport=self.transport())

    def serve(self, host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
        """Start a background HTTP server; ``server.server_address`` has the port."""
        endpoint = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                length = int(self.headers.get("Content-Length", 0))
                body = json.loads(self.rfile.read(length) or b"{}")
                payload = json.dumps(endpoint.completion(body)).encode()
                self.send_response(200)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(payload)))
                self.end_headers()
                self.wfile.write(payload)

            def log_message(self, *args):
                pass

        server = ThreadingHTTPServer((host, port), Handler)
        threading.Thread(target=server.serve_forever, daemon=True).start()
        return server
