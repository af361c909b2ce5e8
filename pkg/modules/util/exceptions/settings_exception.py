from modules.util.exceptions.domain_exception import DomainException


class SettingsException(DomainException):
    pass
