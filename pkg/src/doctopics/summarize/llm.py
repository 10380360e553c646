"""Chat-completion client (OpenAI-compatible wire format) plus offline stub.

Credentials come from an environment variable and are never logged.
Retries use exponential backoff: 1s base, factor 2, at most 3 retries.
"""

from __future__ import annotations

import os
import time

from ..errors import LlmUnavailable
from .sentences import split_sentences

BACKOFF_BASE = 1.0
BACKOFF_FACTOR = 2.0
MAX_RETRIES = 3


class LlmClient:
    offline = False

    def __init__(
        self,
        endpoint: str,
        model: str,
        api_key_env: str = "DOCTOPICS_API_KEY",
        temperature: float = 0.0,
        max_retries: int = MAX_RETRIES,
        timeout: float = 60.0,
        transport=None,
        sleep=time.sleep,
    ):
        self.endpoint = endpoint.rstrip("/")
        self.model = model
        self.api_key_env = api_key_env
        self.temperature = temperature
        self.max_retries = max_retries
        self.timeout = timeout
        self._transport = transport
        self._sleep = sleep

    def complete(self, prompt: str) -> str:
        import httpx

        headers = {}
        key = os.environ.get(self.api_key_env)
        if key:
            headers["Authorization"] = f"Bearer {key}"
        payload = {
            "model": self.model,
            "temperature": self.temperature,
            "messages": [{"role": "user", "content": prompt}],
        }
        last_error: Exception | None = None
        for attempt in range(self.max_retries + 1):
            if attempt:
                self._sleep(BACKOFF_BASE * BACKOFF_FACTOR ** (attempt - 1))
            try:
                with httpx.Client(timeout=self.timeout, transport=self._transport) as client:
                    resp = client.post(
                        f"{self.endpoint}/chat/completions", json=payload, headers=headers
                    )
                    resp.raise_for_status()
                    data = resp.json()
                return data["choices"][0]["message"]["content"]
            except Exception as exc:
                last_error = exc
        raise LlmUnavailable(
            f"completion endpoint failed after {self.max_retries} retries: {last_error}"
        )


class StubLlmClient:
    """Deterministic offline double: echoes the first three input sentences.

    ``fail_times`` simulates transient provider failures for retry tests;
    failures before exhaustion recover without sleeping real time.
    """

    offline = True

    def __init__(self, fail_times: int = 0, max_retries: int = MAX_RETRIES, sleep=None):
        self.fail_times = fail_times
        self.max_retries = max_retries
        self.calls = 0
        self.retries = 0
        self.backoffs: list[float] = []
        self._sleep = sleep or self.backoffs.append

    def complete(self, prompt: str) -> str:
        attempt = 0
        while True:
            self.calls += 1
            if self.fail_times > 0:
                self.fail_times -= 1
                attempt += 1
                if attempt > self.max_retries:
                    raise LlmUnavailable(f"stub failed after {self.max_retries} retries")
                self.retries += 1
                self._sleep(BACKOFF_BASE * BACKOFF_FACTOR ** (attempt - 1))
                continue
            text = prompt.rsplit("\n\n", 1)[0]
            picked = split_sentences(text).texts()[:3]
            return " ".join(picked)
