"""HTTP JSON API over the translation pipeline, plus web-console hosting.

Pipeline failures are domain outcomes for the learner, so they come back
as 200 responses with the error embedded in the report; 4xx is reserved
for transport-level problems (malformed JSON, oversized text).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .errors import NarqlError
from .lexicon import Lexicon, load_bundled_lexicon, load_lexicon_file
from .minidb import Database, execute, load_bundled_seed, load_seed
from .pipeline import translate
from .schema import SchemaCatalog, chinook_catalog
from .sqlgen import SelectQuery

MAX_TEXT_LENGTH = 2000
DEFAULT_ADDR = "127.0.0.1"
DEFAULT_PORT = 8750


class TranslateRequest(BaseModel):
    text: str
    execute: bool = False


def create_app(lexicon: Lexicon | None = None,
               schema: SchemaCatalog | None = None,
               db: Database | None = None,
               static_dir: str | os.PathLike | None = None) -> FastAPI:
    lexicon = lexicon or load_bundled_lexicon()
    schema = schema or chinook_catalog()
    db = db or load_bundled_seed()

    app = FastAPI(title="narql", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    @app.post("/api/translate")
    def api_translate(body: TranslateRequest):
        if len(body.text) > MAX_TEXT_LENGTH:
            return JSONResponse(
                status_code=400,
                content={"detail": f"text exceeds {MAX_TEXT_LENGTH} characters"},
            )
        report = translate(body.text, lexicon, schema)
        payload = report.to_dict()
        if body.execute and report.ok and report.query is not None:
            # default config executes reads only; mutations surface their
            # domain error in the report instead of touching the store
            try:
                if isinstance(report.query, SelectQuery):
                    payload["result"] = execute(db, report.query).to_dict()
                else:
                    execute(db, report.query)
            except NarqlError as err:
                payload["error"] = err.to_dict()
        return JSONResponse(content=payload)

    @app.get("/api/schema")
    def api_schema():
        return JSONResponse(content=schema.to_dict())

    @app.get("/api/languages")
    def api_languages():
        return JSONResponse(content=[
            {"tag": tag, "word_count": count}
            for tag, count in lexicon.languages().items()
        ])

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="console")

    return app


def default_static_dir() -> str | None:
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if candidate.is_dir():
        return str(candidate)
    local = Path("frontend/dist")
    return str(local) if local.is_dir() else None


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="narql-serve",
                                     description="Serve the narql API and web console.")
    parser.add_argument("--addr", default=DEFAULT_ADDR, help="bind address")
    parser.add_argument("--port", type=int, default=DEFAULT_PORT, help="bind port")
    parser.add_argument("--lexicon", metavar="PATH",
                        help="lexicon TSV file (default: bundled, or $NARQL_LEXICON)")
    parser.add_argument("--seed", metavar="PATH", help="seed CSV directory (default: bundled)")
    parser.add_argument("--static", metavar="DIR",
                        help="web console build to serve at / (default: frontend/dist)")
    args = parser.parse_args(argv)

    lexicon_path = args.lexicon or os.environ.get("NARQL_LEXICON")
    try:
        lexicon = load_lexicon_file(lexicon_path) if lexicon_path else load_bundled_lexicon()
        db = load_seed(args.seed) if args.seed else load_bundled_seed()
    except (OSError, NarqlError) as err:
        print(f"narql-serve: {err}", file=sys.stderr)
        return 1

    app = create_app(lexicon=lexicon, db=db,
                     static_dir=args.static or default_static_dir())

    import uvicorn
    uvicorn.run(app, host=args.addr, port=args.port, log_level="info")
    return 0


if __name__ == "__main__":
    sys.exit(main())
