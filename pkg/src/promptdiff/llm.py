"""Text-generation backends: live chat-completions, replay fixtures, cache.

Every request is identified by a stable digest of its five fields; the cache
and the replay fixture file are both keyed by that digest, which is what makes
a whole pipeline run reproducible offline.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from dataclasses import dataclass
from typing import Callable, Optional, Protocol

import httpx


class BackendUnavailable(Exception):
    """Live endpoint unreachable or rejecting after bounded retries."""


class FixtureMiss(Exception):
    """Replay backend has no entry for a request digest; fixture set incomplete."""


@dataclass(frozen=True)
class GenerationRequest:
    model_name: str
    instruction_prefix: str
    body: str
    temperature: float = 0.0
    sample_index: int = 0

    def digest(self) -> str:
        payload = json.dumps(
            [self.model_name, self.instruction_prefix, self.body,
             self.temperature, self.sample_index],
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class GenerationResponse:
    text: str
    source: str  # "live" | "cache" | "replay"


class Backend(Protocol):
    def generate(self, req: GenerationRequest) -> GenerationResponse: ...


DEFAULT_MODEL = "gpt-4-1106-preview"
RETRY_DELAYS = (1.0, 4.0, 16.0)


class LiveBackend:
    """OpenAI-compatible chat-completions client.

    The credential comes from an environment variable, never from config or
    flags. A semaphore bounds in-flight requests.
    """

    def __init__(
        self,
        base_url: str,
        api_key_env: str = "OPENAI_API_KEY",
        max_concurrency: int = 4,
        timeout: float = 120.0,
        sleep: Callable[[float], None] = time.sleep,
        transport: Optional[httpx.BaseTransport] = None,
    ):
        key = os.environ.get(api_key_env)
        if not key:
            raise BackendUnavailable("credential missing: $%s is not set" % api_key_env)
        self._sem = threading.Semaphore(max_concurrency)
        self._sleep = sleep
        self._client = httpx.Client(
            base_url=base_url.rstrip("/"),
            headers={"Authorization": "Bearer %s" % key},
            timeout=timeout,
            transport=transport,
        )

    def generate(self, req: GenerationRequest) -> GenerationResponse:
        payload = {
            "model": req.model_name,
            "temperature": req.temperature,
            "messages": [
                {"role": "user",
                 "content": req.instruction_prefix + "\n" + req.body},
            ],
        }
        last: Exception | None = None
        for attempt, delay in enumerate((0.0,) + RETRY_DELAYS):
            if delay:
                self._sleep(delay)
            try:
                with self._sem:
                    resp = self._client.post("/chat/completions", json=payload)
                resp.raise_for_status()
                text = resp.json()["choices"][0]["message"]["content"]
                return GenerationResponse(text=text, source="live")
            except (httpx.HTTPError, KeyError, ValueError) as exc:
                last = exc
        raise BackendUnavailable("live backend failed after retries: %s" % last)


class ReplayBackend:
    """Deterministic backend serving completions from a JSON-Lines fixture file.

    Each record is ``{"digest": ..., "request_echo": ..., "text": ...}``.
    """

    def __init__(self, fixture_path: str):
        self._entries: dict[str, str] = {}
        with open(fixture_path, "r", encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    rec = json.loads(line)
                    self._entries[rec["digest"]] = rec["text"]

    def generate(self, req: GenerationRequest) -> GenerationResponse:
        digest = req.digest()
        if digest not in self._entries:
            raise FixtureMiss(
                "no fixture entry for digest %s (prefix %r, sample %d)"
                % (digest, req.instruction_prefix[:40], req.sample_index)
            )
        return GenerationResponse(text=self._entries[digest], source="replay")


class CachingBackend:
    """Content-addressed file cache wrapped around another backend.

    A cache hit never reaches the inner backend; live results are persisted
    before being returned.
    """

    def __init__(self, inner: Backend, cache_dir: str):
        self._inner = inner
        self._dir = cache_dir
        self._lock = threading.Lock()
        os.makedirs(cache_dir, exist_ok=True)

    def _path(self, digest: str) -> str:
        return os.path.join(self._dir, digest + ".json")

    def generate(self, req: GenerationRequest) -> GenerationResponse:
        digest = req.digest()
        path = self._path(digest)
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                return GenerationResponse(text=json.load(fh)["text"], source="cache")
        resp = self._inner.generate(req)
        record = {
            "digest": digest,
            "request": {
                "model_name": req.model_name,
                "instruction_prefix": req.instruction_prefix,
                "body": req.body,
                "temperature": req.temperature,
                "sample_index": req.sample_index,
            },
            "text": resp.text,
        }
        with self._lock:
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(record, fh)
            os.replace(tmp, path)
        return resp
