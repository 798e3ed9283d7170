from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from enum import IntEnum
from typing import Any

from structlog.typing import FilteringBoundLogger


class LogLevel(IntEnum):
    NOTSET = 0
    DEBUG = 10
    INFO = 20
    WARNING = 30
    ERROR = 40
    CRITICAL = 50


@dataclass(frozen=True)
class LogEvent:
    event: str
    level: LogLevel
    context: Mapping[str, Any]
    args: Sequence[Any]


class CapturingLogger(FilteringBoundLogger):
    """Records every event together with its bound context.

    Loggers derived through `bind` share one event list, so events
    logged on a bound child are visible from the root.
    """

    events: list[LogEvent]

    @classmethod
    def create(cls, log_level: int = LogLevel.NOTSET) -> "CapturingLogger":
        return cls([], {}, log_level)

    def __init__(
        self,
        events: list[LogEvent],
        context: dict[str, Any],
        log_level: int = LogLevel.NOTSET,
    ):
        self.events = events
        self._context = context
        self._log_level = log_level

    def find_events(
        self, event: str, filter: Callable[[LogEvent], bool] = lambda _: True
    ) -> Sequence[LogEvent]:
        return [
            log_event
            for log_event in self.events
            if log_event.event == event and filter(log_event)
        ]

    def find_event(
        self, event: str, filter: Callable[[LogEvent], bool] = lambda _: True
    ) -> LogEvent | None:
        events = self.find_events(event, filter)
        if len(events) == 0:
            return None
        if len(events) > 1:
            raise ValueError(
                f"Expected only one log event with name {event}, "
                f"found {len(events)}."
            )
        return events[0]

    def _derive(self, context: dict[str, Any]) -> "CapturingLogger":
        return CapturingLogger(self.events, context, self._log_level)

    def bind(self, **new_values: Any) -> FilteringBoundLogger:
        return self._derive({**self._context, **new_values})

    def unbind(self, *keys: str) -> FilteringBoundLogger:
        missing = [key for key in keys if key not in self._context]
        if missing:
            raise KeyError(f"No such binding: {missing[0]}")
        return self.try_unbind(*keys)

    def try_unbind(self, *keys: str) -> FilteringBoundLogger:
        return self._derive(
            {
                key: value
                for key, value in self._context.items()
                if key not in keys
            }
        )

    def new(self, **new_values: Any) -> FilteringBoundLogger:
        return self._derive(dict(new_values))

    def is_enabled_for(self, level: int) -> bool:
        return level >= self._log_level

    def get_effective_level(self) -> int:
        return self._log_level

    def _record(self, level: LogLevel, event: str, args: Any, kw: Any):
        if self.is_enabled_for(level):
            self.events.append(
                LogEvent(
                    event=event,
                    level=level,
                    context={**self._context, **kw},
                    args=args,
                )
            )

    def debug(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.DEBUG, event, args, kw)

    def info(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.INFO, event, args, kw)

    def msg(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.INFO, event, args, kw)

    def warning(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.WARNING, event, args, kw)

    def warn(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.WARNING, event, args, kw)

    def error(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.ERROR, event, args, kw)

    def err(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.ERROR, event, args, kw)

    def exception(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.ERROR, event, args, kw)

    def critical(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.CRITICAL, event, args, kw)

    def fatal(self, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel.CRITICAL, event, args, kw)

    def log(self, level: int, event: str, *args: Any, **kw: Any) -> Any:
        self._record(LogLevel(level), event, args, kw)
