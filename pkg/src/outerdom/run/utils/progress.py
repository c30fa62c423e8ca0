"""Progress display for experiment batches, rendered on standard error."""

import collections
import time
from datetime import timedelta
from threading import Lock

from rich.console import Group
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn, TimeElapsedColumn
from rich.table import Table


def _shorten_str(s: str, max_len: int) -> str:
    s = s[: max_len - 3] + "..." if len(s) > max_len else s
    return f"{s:<{max_len}}"


class ExperimentProgressManager:
    def __init__(self, num_instances: int, description: str = "Instances"):
        self._lock = Lock()
        self._start_time = time.time()
        self._total_instances = num_instances
        self._instances_by_status: dict[str, list[str]] = collections.defaultdict(list)
        self._main_progress_bar = Progress(
            SpinnerColumn(spinner_name="dots2"),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TaskProgressColumn(),
            TimeElapsedColumn(),
            TextColumn("[cyan]{task.fields[eta]}[/cyan]"),
        )
        self._main_task_id = self._main_progress_bar.add_task(f"[cyan]{description}", total=num_instances, eta="")
        self.render_group = Group(self._main_progress_bar, Table())

    @property
    def n_completed(self) -> int:
        return sum(len(instances) for instances in self._instances_by_status.values())

    def _get_eta_text(self) -> str:
        try:
            estimated_remaining = (
                (time.time() - self._start_time) / self.n_completed * (self._total_instances - self.n_completed)
            )
            return f"eta: {timedelta(seconds=int(estimated_remaining))}"
        except ZeroDivisionError:
            return ""

    def update_status_table(self) -> None:
        t = Table()
        t.add_column("Status")
        t.add_column("Count", justify="right", style="bold cyan")
        t.add_column("Most recent instances")
        with self._lock:
            for status, instances in sorted(self._instances_by_status.items(), key=lambda x: len(x[1]), reverse=True):
                t.add_row(status, str(len(instances)), _shorten_str(", ".join(reversed(instances[-5:])), 55))
        self.render_group.renderables[1] = t

    def on_instance_end(self, instance_id: str, status: str) -> None:
        with self._lock:
            self._instances_by_status[status].append(instance_id)
            self._main_progress_bar.update(self._main_task_id, advance=1, eta=self._get_eta_text())
        self.update_status_table()

    def summary(self) -> dict[str, int]:
        return {status: len(instances) for status, instances in self._instances_by_status.items()}
