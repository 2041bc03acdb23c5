"""Thin command-line client for the HTTP service.

By default requests are dispatched to the service in-process over an ASGI
transport (no socket, no running server); --server points the same client
at a remote instance. The response body is written to stdout verbatim and
the exit code comes from the X-Exit-Code header the service computes.
"""

from __future__ import annotations

import asyncio
import sys

import httpx

from .config import RunConfig, parse_args
from .errors import UsageError
from .reporting import EXIT_INTERNAL, EXIT_USAGE

_IN_PROCESS_URL = "http://smoothworld.internal"


def build_request(config: RunConfig) -> tuple[str, dict]:
    """Map a parsed config onto (endpoint path, JSON payload)."""
    c = config
    table: dict[str, tuple[str, dict]] = {
        "color": ("/v1/color", {"primes": list(c.primes), "exponent": c.exponent,
                                "values": list(c.values)}),
        "smooth": ("/v1/smooth", {"primes": list(c.primes), "limit": c.limit}),
        "schur-search": ("/v1/schur/search", {"primes": list(c.primes),
                                              "exponent": c.exponent, "limit": c.limit}),
        "schur-number": ("/v1/schur/number", {"colors": c.colors,
                                              "budget_seconds": c.budget_seconds,
                                              "budget_nodes": c.budget_nodes}),
        "schur-count": ("/v1/schur/count", {"primes": list(c.primes),
                                            "exponent": c.exponent, "limit": c.limit}),
        "ramsey-reduce": ("/v1/ramsey/reduce", {"colors": c.colors, "limit": c.limit,
                                                "seed": c.seed}),
        "k2": ("/v1/ramsey/k2", {"colors": c.colors, "limit": c.limit,
                                 "witness_size": c.witness_size, "seed": c.seed}),
        "flt": ("/v1/oracle/flt", {"exponent": c.exponent, "bound": c.bound}),
        "dm": ("/v1/oracle/dm", {"exponent": c.exponent, "bound": c.bound}),
        "ap": ("/v1/oracle/ap", {"exponent": c.exponent, "length": c.length,
                                 "bound": c.bound}),
        "gaps": ("/v1/oracle/gaps", {"exponent": c.exponent, "bound": c.bound,
                                     "difference": c.difference}),
        "density": ("/v1/density", {"primes": list(c.primes), "exponent": c.exponent,
                                    "limits": list(c.limits)}),
        "folkman": ("/v1/folkman", {"primes": list(c.primes), "exponent": c.exponent,
                                    "limit": c.limit, "set_size": c.set_size}),
        "theorem1": ("/v1/theorem1", {"primes": list(c.primes), "exponent": c.exponent,
                                      "limit": c.limit}),
        "theorem3": ("/v1/theorem3", {"primes": list(c.primes), "exponent": c.exponent,
                                      "limit": c.limit}),
        "theorem5": ("/v1/theorem5", {"primes": list(c.primes), "exponent": c.exponent,
                                      "limit": c.limit, "set_size": c.set_size}),
        "theorem8": ("/v1/theorem8", {"primes": list(c.primes), "exponent": c.exponent,
                                      "limit": c.limit, "witness_size": c.witness_size}),
        "suite": ("/v1/suite", {"seed": c.seed, "threads": c.threads}),
    }
    return table[config.command]


async def _dispatch(config: RunConfig, path: str, payload: dict) -> httpx.Response:
    params = {"fmt": config.fmt, "timing": config.timing}
    if config.server is not None:
        async with httpx.AsyncClient(base_url=config.server, timeout=3600.0) as client:
            return await client.post(path, json=payload, params=params)
    from .service import create_app

    transport = httpx.ASGITransport(app=create_app())
    async with httpx.AsyncClient(
        transport=transport, base_url=_IN_PROCESS_URL, timeout=3600.0
    ) as client:
        return await client.post(path, json=payload, params=params)


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    path, payload = build_request(config)
    try:
        response = asyncio.run(_dispatch(config, path, payload))
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if response.status_code >= 400:
        sys.stderr.write(response.text)
        if not response.text.endswith("\n"):
            sys.stderr.write("\n")
        fallback = EXIT_USAGE if response.status_code < 500 else EXIT_INTERNAL
        return int(response.headers.get("x-exit-code", fallback))
    sys.stdout.buffer.write(response.content)
    sys.stdout.buffer.flush()
    return int(response.headers.get("x-exit-code", 0))


if __name__ == "__main__":
    sys.exit(main())
