import numpy as np
from typing import List, Dict, Any
from collections import defaultdict
from ..data.schemas import ReportRow, CellStatus


class SuiteMetrics:
    """Aggregate pass rates and runtimes over table rows and suite runs"""

    @staticmethod
    def runtime_summary(seconds: List[float]) -> Dict[str, Any]:
        """Mean, spread and percentiles of per-instance runtimes"""
        if not seconds:
            return {}

        summary = {
            "mean": float(np.mean(seconds)),
            "std": float(np.std(seconds)),
            "min": float(min(seconds)),
            "max": float(max(seconds)),
            "count": len(seconds),
        }
        for p in [25, 50, 75, 90, 95]:
            summary[f"p{p}"] = float(np.percentile(seconds, p))
        return summary

    @staticmethod
    def calculate_aggregate_metrics(rows: List[ReportRow]) -> Dict[str, Any]:
        """Totals over every executed row"""
        if not rows:
            return {}

        executed = [r for r in rows if r.total]
        rates = [r.pass_rate for r in executed]
        metrics = {
            "overall": {
                "rows": len(rows),
                "executed_rows": len(executed),
                "instances": sum(r.total for r in executed),
                "passed": sum(r.passed for r in executed),
                "fallbacks": sum(r.fallbacks for r in executed),
                "avg_pass_rate": float(np.mean(rates)) if rates else None,
                "min_pass_rate": float(min(rates)) if rates else None,
                "seconds": float(sum(r.seconds for r in rows)),
            }
        }
        metrics["by_status"] = SuiteMetrics.count_by_status(rows)
        return metrics

    @staticmethod
    def count_by_status(rows: List[ReportRow]) -> Dict[str, int]:
        counts: Dict[str, int] = defaultdict(int)
        for row in rows:
            counts[CellStatus(row.status).value] += 1
        return dict(counts)

    @staticmethod
    def calculate_metrics_by_class(rows: List[ReportRow]) -> Dict[str, Dict[str, Any]]:
        """Pass counts grouped by class row"""
        grouped = defaultdict(list)
        for row in rows:
            grouped[f"{row.class_label} g3 {row.g3_label}"].append(row)

        by_class = {}
        for label, class_rows in grouped.items():
            executed = [r for r in class_rows if r.total]
            by_class[label] = {
                "passed": sum(r.passed for r in executed),
                "total": sum(r.total for r in executed),
                "fallbacks": sum(r.fallbacks for r in executed),
                "cells": len(class_rows),
            }
        return by_class

    @staticmethod
    def identify_failures(rows: List[ReportRow]) -> Dict[str, Any]:
        """Rows whose executed check did not fully succeed"""
        bad = [
            r for r in rows
            if CellStatus(r.status) in (CellStatus.FAILED, CellStatus.TIMEOUT)
            or (r.total and r.passed < r.total)
        ]
        return {
            "failing_rows": [f"{r.class_label} g3 {r.g3_label} ({r.sequence}) {r.column}" for r in bad],
            "failing_count": len(bad),
            "fallback_rows": [f"{r.class_label} g3 {r.g3_label} ({r.sequence})" for r in rows if r.fallbacks],
        }
