import os
import logging
from enum import Enum
from dotenv import load_dotenv
from opentelemetry import trace
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter
from opentelemetry.sdk.resources import SERVICE_NAME, SERVICE_VERSION, Resource

# Load environment variables
load_dotenv()

# Configure logging (stderr)
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

_tracer_provider = None


def setup_tracing():
    """
    Install the OpenTelemetry tracer provider when ENABLE_TRACING is true.

    Safe to call from every module that traces; only the first call installs
    an exporter. Returns the provider, or None when tracing is disabled.
    """
    global _tracer_provider

    if os.getenv("ENABLE_TRACING", "false").lower() != "true":
        logger.debug("Tracing is disabled")
        return None
    if _tracer_provider is not None:
        return _tracer_provider

    from outerthick import __version__

    provider = TracerProvider(resource=Resource(attributes={
        SERVICE_NAME: "outerthick",
        SERVICE_VERSION: __version__,
    }))
    trace.set_tracer_provider(provider)

    exporter_type = os.getenv("TRACING_EXPORTER", "console").lower()
    if exporter_type == "otlp":
        from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter

        endpoint = os.getenv("OTLP_ENDPOINT", "http://localhost:4317")
        provider.add_span_processor(BatchSpanProcessor(OTLPSpanExporter(endpoint=endpoint)))
        logger.info(f"OTLP tracing enabled, sending to {endpoint}")
    else:
        provider.add_span_processor(BatchSpanProcessor(ConsoleSpanExporter()))
        logger.info("Console tracing enabled")

    _tracer_provider = provider
    return provider


def get_tracer(name):
    """Get a tracer for the given name"""
    return trace.get_tracer(name)


def record(span, **attributes):
    """Set span attributes, unwrapping enums and skipping missing values."""
    for key, value in attributes.items():
        if value is None:
            continue
        if isinstance(value, Enum):
            value = value.value
        span.set_attribute(key, value)


def record_graph(span, g, **attributes):
    """Set the order and size of a graph plus any extra attributes."""
    record(span, n=g.n, m=g.m, **attributes)
