import logging

ATTENTION = logging.INFO + 5
logging.addLevelName(ATTENTION, "ATTENTION")


class AppLogger(logging.Logger):
    def attention(self, msg, *args, **kwargs):
        """Something the user should notice without it being a problem"""
        if self.isEnabledFor(ATTENTION):
            self._log(ATTENTION, msg, args, **kwargs)


def getAppLogger(name="coocnet") -> AppLogger:
    oldClass = logging.getLoggerClass()
    logging.setLoggerClass(AppLogger)
    try:
        logger = logging.getLogger(name)
    finally:
        logging.setLoggerClass(oldClass)
    return logger


# Populate initially
getAppLogger().setLevel(logging.INFO)
