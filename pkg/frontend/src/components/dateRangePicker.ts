/**
 * Date-range picker: two native date inputs bounded by the data range.
 *
 * The picker enforces from <= to locally: moving one input past the
 * other drags the other along, and a single onChange fires per edit.
 */

export interface DateRangePickerController {
  element: HTMLElement;
  /** Bound both inputs to the available data range. */
  setBounds(min: string | null, max: string | null): void;
  setRange(from: string | null, to: string | null): void;
  destroy(): void;
}

export function createDateRangePicker(options: {
  onChange: (from: string | null, to: string | null) => void;
}): DateRangePickerController {
  const element = document.createElement("div");
  element.className = "control date-range";

  const fromInput = document.createElement("input");
  fromInput.type = "date";
  fromInput.setAttribute("aria-label", "posted from");
  const toInput = document.createElement("input");
  toInput.type = "date";
  toInput.setAttribute("aria-label", "posted to");

  const fromLabel = document.createElement("label");
  fromLabel.append("From ", fromInput);
  const toLabel = document.createElement("label");
  toLabel.append("to ", toInput);
  element.append(fromLabel, toLabel);

  function emit(): void {
    options.onChange(fromInput.value || null, toInput.value || null);
  }

  const handleFrom = () => {
    if (toInput.value && fromInput.value > toInput.value) {
      toInput.value = fromInput.value;
    }
    emit();
  };
  const handleTo = () => {
    if (fromInput.value && toInput.value && toInput.value < fromInput.value) {
      fromInput.value = toInput.value;
    }
    emit();
  };
  fromInput.addEventListener("change", handleFrom);
  toInput.addEventListener("change", handleTo);

  return {
    element,

    setBounds(min, max) {
      fromInput.min = min ?? "";
      fromInput.max = max ?? "";
      toInput.min = min ?? "";
      toInput.max = max ?? "";
    },

    setRange(from, to) {
      const nextFrom = from ?? "";
      const nextTo = to ?? "";
      if (fromInput.value !== nextFrom) fromInput.value = nextFrom;
      if (toInput.value !== nextTo) toInput.value = nextTo;
    },

    destroy() {
      fromInput.removeEventListener("change", handleFrom);
      toInput.removeEventListener("change", handleTo);
      element.remove();
    },
  };
}
