"""
A base class and utilities to provide a common set of behaviours for
the long running workbench processes.
"""
import os
import time
import threading
import logging
import signal
import sys

from assemblyline.common import log as al_log

from graphbench_core.config import RunConfig, load_config

SHUTDOWN_SECONDS_LIMIT = 10


def share_handlers():
    """init_logging only configures the 'assemblyline' logger tree; route 'graphbench' through it too."""
    source = logging.getLogger('assemblyline')
    target = logging.getLogger('graphbench')
    target.setLevel(source.level)
    for handler in source.handlers:
        if handler not in target.handlers:
            target.addHandler(handler)


class WorkbenchBase(threading.Thread):
    """Utility class for workbench processes.

    Inheriting from thread so that the main work is done off the main thread.
    This lets the main thread handle interrupts properly, even when a sweep
    is deep inside an exhaustive search.
    """
    def __init__(self, component_name: str, logger: logging.Logger = None,
                 shutdown_timeout: float = SHUTDOWN_SECONDS_LIMIT, config: RunConfig = None):
        super().__init__(name=component_name)
        al_log.init_logging(component_name)
        share_handlers()
        self.config = config or load_config()

        self.running = None
        self.log = logger or logging.getLogger(component_name)
        self._exception = None
        self._traceback = None
        self._shutdown_timeout = shutdown_timeout if shutdown_timeout is not None else SHUTDOWN_SECONDS_LIMIT
        self._old_sigint = None
        self._old_sigterm = None
        self._stopped = False

    def __enter__(self):
        self.log.info("Initialized")
        return self

    def __exit__(self, _exc_type, _exc_val, _exc_tb):
        self.close()
        if _exc_type is not None:
            self.log.exception(f'Terminated because of an {_exc_type} exception')
        else:
            self.log.info('Terminated')

    def __stop(self):
        """Hard stop, if a sweep ignores the running flag for too long."""
        time.sleep(self._shutdown_timeout)
        if self._stopped or not self.is_alive():
            return
        self._stopped = True
        self.log.error(f"Workbench has shutdown hard after waiting {self._shutdown_timeout} seconds to stop")
        # Ends the whole process, not only this thread
        os._exit(1)

    def close(self):
        pass

    def interrupt_handler(self, signum, stack_frame):
        self.log.info("Instance caught signal. Coming down...")
        self.stop()
        if signum == signal.SIGINT and self._old_sigint:
            self._old_sigint(signum, stack_frame)
        if signum == signal.SIGTERM and self._old_sigterm:
            self._old_sigterm(signum, stack_frame)

    def raising_join(self):
        self.join()
        if self._traceback and self._exception:
            raise self._exception.with_traceback(self._traceback)

    # noinspection PyBroadException
    def run(self):
        try:
            self.try_run()
        except Exception:
            _, self._exception, self._traceback = sys.exc_info()
            self.log.exception("Exiting:")
        finally:
            self._stopped = True

    def serve_forever(self):
        self.start()
        self.raising_join()

    def start(self):
        """Start the workload."""
        self.running = True
        super().start()
        self.log.info("Started")
        if threading.current_thread() is threading.main_thread():
            self._old_sigint = signal.signal(signal.SIGINT, self.interrupt_handler)
            self._old_sigterm = signal.signal(signal.SIGTERM, self.interrupt_handler)

    def stop(self):
        """Ask nicely for the workload to stop.

        After a timeout, a hard stop will be triggered.
        """
        # Sweeps check this flag between partitions.
        self.running = False

        stop_thread = threading.Thread(target=self.__stop)
        stop_thread.daemon = True
        stop_thread.start()

    def try_run(self):
        pass
