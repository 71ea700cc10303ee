"""
NumRange Toolkit - Observability System
Implements logging, tracing, and metrics for scans, catalog calls and suite runs
"""

import json
import logging
import threading
import time
from datetime import datetime
from functools import wraps
from pathlib import Path
from typing import Any, Dict, List, Optional

from config.settings import Settings


class NumRangeLogger:
    """Structured logging with workflow tracing and metric counters"""

    def __init__(self, name: str = "NumRange"):
        self.name = name
        self.metrics: Dict[str, List[float]] = {
            "eigensolves": [],
            "bnb_nodes": [],
            "workflow_seconds": [],
            "cache_hits": [],
        }
        self._lock = threading.Lock()

        self.logger = self._setup_logger()

        self.traces: List[Dict[str, Any]] = []

    def _setup_logger(self) -> logging.Logger:
        """Configure structured logging"""
        nr_logger = logging.getLogger(self.name)
        nr_logger.setLevel(getattr(logging, Settings.LOG_LEVEL))
        nr_logger.propagate = False

        formatter = logging.Formatter(
            "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )

        # stderr keeps stdout free for CSV/JSON output
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        nr_logger.addHandler(console_handler)

        if Settings.ENABLE_FILE_LOG:
            Settings.LOGS_DIR.mkdir(exist_ok=True)
            log_file = Settings.LOGS_DIR / f"numrange_{datetime.now().strftime('%Y%m%d')}.log"
            file_handler = logging.FileHandler(log_file, encoding="utf-8")
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            nr_logger.addHandler(file_handler)

        return nr_logger

    def set_level(self, level: str):
        """Change the verbosity at runtime (CLI --verbose)"""
        self.logger.setLevel(getattr(logging, level.upper()))

    def log_action(self, component: str, action: str, details: Dict[str, Any]):
        """Log component actions with structured data"""
        self.logger.info(f"[ACTION] {component} | ACTION: {action} | {json.dumps(details, default=str)}")

        if Settings.ENABLE_TRACING:
            with self._lock:
                self.traces.append(
                    {
                        "timestamp": datetime.now().isoformat(),
                        "component": component,
                        "action": action,
                        "details": details,
                    }
                )

    def log_tool_usage(self, tool_name: str, input_data: Any, output_data: Any):
        """Log tool invocations"""
        self.logger.debug(f"[TOOL] {tool_name} | INPUT: {input_data} | OUTPUT: {output_data}")

    def log_error(self, component: str, error: Exception, context: Optional[Dict[str, Any]] = None):
        """Log errors with full context"""
        error_data = {
            "component": component,
            "error_type": type(error).__name__,
            "error_message": str(error),
            "context": context or {},
        }
        self.logger.error(f"[ERROR] {component}: {error}", exc_info=True)
        with self._lock:
            self.traces.append({"type": "error", **error_data})

    def record_metric(self, metric_name: str, value: float):
        """Record performance metrics"""
        if metric_name in self.metrics:
            with self._lock:
                self.metrics[metric_name].append(value)
            self.logger.debug(f"[METRIC] {metric_name} = {value}")

    def trace_workflow(self, workflow_name: str):
        """Decorator for tracing long-running workflows"""

        def decorator(func):
            @wraps(func)
            def wrapper(*args, **kwargs):
                start_time = time.perf_counter()
                trace_id = f"{workflow_name}_{int(time.time() * 1000)}"

                self.logger.info(f"[START WORKFLOW] {workflow_name} (ID: {trace_id})")

                try:
                    result = func(*args, **kwargs)
                except Exception as e:
                    duration = time.perf_counter() - start_time
                    self.log_error(workflow_name, e, {"trace_id": trace_id, "duration": duration})
                    raise

                duration = time.perf_counter() - start_time
                self.log_action(
                    workflow_name,
                    "WORKFLOW_COMPLETE",
                    {"duration_seconds": round(duration, 6), "trace_id": trace_id},
                )
                self.record_metric("workflow_seconds", duration)
                return result

            return wrapper

        return decorator

    def get_metrics_summary(self) -> Dict[str, Dict[str, float]]:
        """Get aggregated metrics"""
        summary = {}
        with self._lock:
            snapshot = {k: list(v) for k, v in self.metrics.items()}
        for metric_name, values in snapshot.items():
            if values:
                summary[metric_name] = {
                    "count": len(values),
                    "total": sum(values),
                    "avg": sum(values) / len(values),
                    "min": min(values),
                    "max": max(values),
                }
        return summary

    def export_traces(self, filepath: Optional[Path] = None) -> Path:
        """Export trace data for analysis"""
        if not filepath:
            Settings.LOGS_DIR.mkdir(exist_ok=True)
            filepath = Settings.LOGS_DIR / f"traces_{datetime.now().strftime('%Y%m%d_%H%M%S')}.json"

        with self._lock:
            traces = list(self.traces)
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(traces, f, indent=2, default=str)

        self.logger.info(f"Traces exported to {filepath}")
        return Path(filepath)

    def reset(self):
        """Drop collected traces and metrics"""
        with self._lock:
            self.traces.clear()
            for values in self.metrics.values():
                values.clear()


# Global logger instance
nr_logger = NumRangeLogger()
