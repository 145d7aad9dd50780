import functools
import logging
import time


def time_usage(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        beg_ts = time.perf_counter()
        retval = func(*args, **kwargs)
        end_ts = time.perf_counter()
        logging.info("%s executed in %fs" % (func.__name__, end_ts - beg_ts))
        return retval
    return wrapper
